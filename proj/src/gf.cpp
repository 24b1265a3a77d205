#include "hq/gf.hpp"

#include <cctype>
#include <stdexcept>

namespace hq::gf {

namespace {

// Polynomials over GF(p) as int vectors, constant term first, for the modulus
// search only. Kept separate from Element arithmetic on purpose.
using Poly = std::vector<int>;

int degree(const Poly& f) {
    for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
        if (f[d] != 0) return d;
    return -1;
}

// Remainder of f by monic g, coefficients mod p.
Poly poly_rem(Poly f, const Poly& g, int p) {
    int dg = degree(g);
    for (int d = degree(f); d >= dg; d = degree(f)) {
        int c = f[d];
        if (c != 0) {
            for (int k = 0; k <= dg; ++k) {
                int idx = d - dg + k;
                f[idx] = ((f[idx] - c * g[k]) % p + p) % p;
            }
        }
        f[d] = 0;
    }
    return f;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, int p) {
    int df = degree(f);
    for (int dd = 1; dd <= df / 2; ++dd) {
        // all monic divisors of degree dd, odometer over the lower coefficients
        std::vector<int> low(dd, 0);
        while (true) {
            Poly g(low.begin(), low.end());
            g.push_back(1);
            if (degree(poly_rem(f, g, p)) < 0) return false;
            int i = dd - 1;
            while (i >= 0 && low[i] == p - 1) low[i--] = 0;
            if (i < 0) break;
            ++low[i];
        }
    }
    return true;
}

}  // namespace

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power(int q, int& p, int& e) {
    if (q < 2) return false;
    for (int d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            e = 0;
            int m = q;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            return m == 1;  // q = d^e exactly
        }
    }
    return false;
}

std::string element_text(const Element& a) {
    if (a.e <= 1) return std::to_string(static_cast<int>(a.c[0]));
    int len = a.e;
    while (len > 1 && a.c[len - 1] == 0) --len;
    std::string s;
    for (int i = 0; i < len; ++i) s += static_cast<char>('0' + a.c[i]);
    return s;
}

Field::Field(int p, int e, int max_order) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("field degree must be at least 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > max_order)
            throw std::invalid_argument("field order " + std::to_string(p) + "^" +
                                        std::to_string(e) + " exceeds the bound " +
                                        std::to_string(max_order));
    }
    p_ = p;
    e_ = e;
    q_ = static_cast<int>(q);

    if (e_ == 1) {
        modulus_ = {0, 1};  // x; unused beyond degree bookkeeping
        return;
    }
    // Canonical modulus: smallest monic irreducible under the coefficient-tuple
    // order with the constant term most significant.
    std::vector<int> low(e_, 0);
    while (true) {
        Poly cand(low.begin(), low.end());
        cand.push_back(1);
        if (poly_irreducible(cand, p_)) {
            modulus_ = cand;
            return;
        }
        int i = e_ - 1;  // last coefficient is least significant in the order
        while (i >= 0 && low[i] == p_ - 1) low[i--] = 0;
        if (i < 0) break;
        ++low[i];
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::string Field::name() const {
    if (e_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "^" + std::to_string(e_);
}

void Field::check(const Element& a) const {
    if (a.p != p_ || a.e != e_)
        throw std::invalid_argument("element does not belong to GF(" + name() + ")");
}

Element Field::zero() const {
    Element r;
    r.p = static_cast<std::uint8_t>(p_);
    r.e = static_cast<std::uint8_t>(e_);
    return r;
}

Element Field::one() const {
    Element r = zero();
    r.c[0] = 1;
    return r;
}

Element Field::from_coeffs(std::span<const int> coeffs) const {
    if (static_cast<int>(coeffs.size()) != e_)
        throw std::invalid_argument("expected exactly " + std::to_string(e_) + " coefficients");
    Element r = zero();
    for (int i = 0; i < e_; ++i) r.c[i] = static_cast<std::uint8_t>(((coeffs[i] % p_) + p_) % p_);
    return r;
}

Element Field::from_value(int v) const {
    if (v < 0 || v >= q_) throw std::invalid_argument("element value out of range");
    Element r = zero();
    for (int i = 0; i < e_; ++i) {
        r.c[i] = static_cast<std::uint8_t>(v % p_);
        v /= p_;
    }
    return r;
}

int Field::value(const Element& a) const {
    check(a);
    int v = 0;
    for (int i = e_ - 1; i >= 0; --i) v = v * p_ + a.c[i];
    return v;
}

std::vector<Element> Field::elements() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(q_));
    for (int v = 0; v < q_; ++v) out.push_back(from_value(v));
    return out;
}

Element Field::add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r = zero();
    for (int i = 0; i < e_; ++i) r.c[i] = static_cast<std::uint8_t>((a.c[i] + b.c[i]) % p_);
    return r;
}

Element Field::sub(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r = zero();
    for (int i = 0; i < e_; ++i)
        r.c[i] = static_cast<std::uint8_t>(((a.c[i] - b.c[i]) % p_ + p_) % p_);
    return r;
}

Element Field::neg(const Element& a) const { return sub(zero(), a); }

Element Field::mul(const Element& a, const Element& b) const {
    check(a);
    check(b);
    // product polynomial, degree <= 2e-2
    std::array<int, 2 * kMaxDegree> prod{};
    for (int i = 0; i < e_; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % p_;
    }
    // reduce with x^e == -(m_0 + m_1 x + ... + m_{e-1} x^{e-1})
    for (int d = 2 * e_ - 2; d >= e_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int k = 0; k < e_; ++k) {
            int idx = d - e_ + k;
            prod[idx] = ((prod[idx] - c * modulus_[k]) % p_ + p_) % p_;
        }
    }
    Element r = zero();
    for (int i = 0; i < e_; ++i) r.c[i] = static_cast<std::uint8_t>(prod[i]);
    return r;
}

Element Field::inv(const Element& a) const {
    check(a);
    if (is_zero(a)) throw std::domain_error("division by zero in GF(" + name() + ")");
    const Element id = one();
    for (int v = 1; v < q_; ++v) {
        Element cand = from_value(v);
        if (mul(a, cand) == id) return cand;
    }
    throw std::logic_error("no inverse found");  // unreachable in a field
}

Element Field::pow(const Element& a, long long n) const {
    check(a);
    if (n < 0) return pow(inv(a), -n);
    Element r = one();
    Element base = a;
    while (n > 0) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

bool Field::is_zero(const Element& a) const {
    check(a);
    for (int i = 0; i < e_; ++i)
        if (a.c[i] != 0) return false;
    return true;
}

std::string Field::to_string(const Element& a) const {
    check(a);
    return element_text(a);
}

std::optional<Element> Field::parse(std::string_view s) const {
    if (s.empty()) return std::nullopt;
    if (e_ == 1) {
        // decimal residue; p can exceed 9, so multi-character values are legal
        if (s.size() > 2) return std::nullopt;
        int v = 0;
        for (char ch : s) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
            v = v * 10 + (ch - '0');
        }
        if (v >= p_) return std::nullopt;
        return from_value(v);
    }
    if (static_cast<int>(s.size()) > e_) return std::nullopt;
    Element r = zero();
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        int d = ch - '0';
        if (d >= p_) return std::nullopt;
        r.c[i] = static_cast<std::uint8_t>(d);
    }
    return r;
}

}  // namespace hq::gf
