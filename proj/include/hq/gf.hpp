// gf.hpp — exact arithmetic in GF(p^e) for small prime powers (q <= 16 by default).
//
// Elements are residue polynomials of degree < e over GF(p), stored as explicit
// coefficient vectors (constant term first). The field modulus is the canonical
// one: the lexicographically smallest monic irreducible of degree e, comparing
// coefficient tuples with the constant term most significant. This makes every
// enumeration downstream reproducible across runs and platforms.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hq::gf {

inline constexpr int kMaxDegree = 4;  // q <= 16 forces e <= 4
inline constexpr int kDefaultMaxOrder = 16;

// A field element. p and e tag the owning field so that accidental mixing of
// elements from different fields is caught at the operation site.
struct Element {
    std::array<std::uint8_t, kMaxDegree> c{};  // coefficients, constant term first
    std::uint8_t p = 0;
    std::uint8_t e = 0;

    friend bool operator==(const Element&, const Element&) = default;
};

// Digit string of an element: base-p digits, constant term first, trailing
// (high-degree) zero digits trimmed, at least one digit. GF(4): "0", "1",
// "01" (= x), "11" (= x+1). Prime fields render the residue in decimal.
std::string element_text(const Element& a);

bool is_prime(int n);

// Decomposes q as p^e with p prime; returns false if q is not a prime power >= 2.
bool prime_power(int q, int& p, int& e);

class Field {
public:
    // Builds GF(p^e) with the canonical modulus. Throws std::invalid_argument
    // on non-prime p, e < 1, or p^e > max_order.
    Field(int p, int e, int max_order = kDefaultMaxOrder);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    // Monic modulus polynomial, e+1 coefficients, constant term first.
    // For prime fields this is x, used only for degree bookkeeping.
    const std::vector<int>& modulus() const { return modulus_; }

    // "p" for prime fields, "p^e" otherwise.
    std::string name() const;

    Element zero() const;
    Element one() const;

    // Element from exactly e coefficients; values are reduced mod p.
    Element from_coeffs(std::span<const int> coeffs) const;

    // Element whose coefficient vector is the base-p expansion of v, 0 <= v < q.
    // value() is the inverse map and doubles as the global enumeration index.
    Element from_value(int v) const;
    int value(const Element& a) const;

    // All q elements in enumeration order: 0, 1, then ascending value.
    std::vector<Element> elements() const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    // Multiplicative inverse by exhaustive search (q <= 16). Throws
    // std::domain_error on zero.
    Element inv(const Element& a) const;
    Element pow(const Element& a, long long n) const;

    bool is_zero(const Element& a) const;

    std::string to_string(const Element& a) const;
    // Parses the element_text form; also accepts untrimmed digit strings of up
    // to e digits. Returns nullopt on malformed input.
    std::optional<Element> parse(std::string_view s) const;

private:
    void check(const Element& a) const;

    int p_ = 0, e_ = 0, q_ = 0;
    std::vector<int> modulus_;
};

}  // namespace hq::gf
