// verify.hpp — the characterization pipeline for plane families of PG(3,q).
//
// Given a candidate family of planes, runs the full chain of checks (the two
// incidence properties, the counting identities on black/white points, the
// per-plane black counts, the line duality, the black-line structure, the
// generalized-quadrangle axioms), then reconstructs a quadratic form from the
// black points and certifies that the family is exactly the secant-plane
// family of that quadric. Each check appends one record to the certificate;
// a failure carries a minimal witness and stops the chain, leaving a partial
// certificate. Certificates are deterministic: same input, same bytes.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hq/pg3.hpp"
#include "hq/quadric.hpp"

namespace hq::verify {

struct PlaneFamily {
    int p = 0, e = 0;                       // ambient field
    std::vector<std::int32_t> members;      // sorted, unique plane indices
    int q() const;
};

// Builds a family from plane indices: sorts, and validates that indices are
// in range, unique, and nonempty. Throws std::invalid_argument otherwise.
PlaneFamily make_family(const pg3::Geometry& g, std::vector<std::int32_t> members);

enum class Color : std::uint8_t { White, Black, Invalid };

struct PointColoring {
    std::vector<std::int32_t> family_count;  // per point: family planes through it
    std::vector<Color> color;
    std::int64_t black = 0, white = 0, invalid = 0;
    std::int32_t first_invalid = -1;
};

// Property (P1) data: a point is black when it lies on q^2-q family planes,
// white at q^2, invalid otherwise.
PointColoring color_points(const pg3::Geometry& g, const PlaneFamily& fam);

struct LineCounts {
    std::vector<std::int32_t> family_count;  // per line: family planes in its pencil
    std::int32_t first_bad = -1;             // first line outside {0, q-1, q, q+1}
};

// Property (P2) data.
LineCounts count_family_per_line(const pg3::Geometry& g, const PlaneFamily& fam);

// Lines all q+1 of whose points are black.
std::vector<std::int32_t> black_lines(const pg3::Geometry& g, const PointColoring& coloring);

struct Measure {
    std::string key;
    std::int64_t value;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::vector<Measure> measured;
    std::string witness_kind;            // "point", "line", "plane", "planes", ...
    std::vector<std::int32_t> witness;
    std::string note;

    std::int64_t measure(std::string_view key) const;  // throws if absent
};

struct Certificate {
    std::string field_name;    // "2", "3^2", ...
    std::int64_t family_size = 0;
    std::vector<CheckResult> checks;
    std::optional<quadric::Form> reconstructed;
    bool overall_pass = false;

    const CheckResult* find(std::string_view name) const;
};

// The generalized-quadrangle axioms of order (q,1) on (black points of the
// coloring, the given line set): |P| = (q+1)^2, |L| = 2(q+1), lines of size
// q+1, every black point on exactly 2 of the lines, two lines share at most
// one point, and every non-incident point-line pair has a unique connecting
// line. The returned record carries pass/fail and a witness on failure.
CheckResult check_gq(const pg3::Geometry& g, const PointColoring& coloring,
                     const std::vector<std::int32_t>& lines);

struct ReconstructionResult {
    int fit_dim = 0;   // dimension of the space of forms vanishing on B
    int matches = 0;   // candidates whose zero set is exactly B
    std::optional<quadric::Form> form;  // the unique hyperbolic match
    std::string failure;                // empty on success, else the failure code
};

// Fits the space of quadratic forms vanishing on the black points, filters by
// exact zero-set equality, and demands a unique hyperbolic survivor. Distinct
// failures (no form, no exact match, ambiguous match, non-hyperbolic result,
// oversized solution space) come back as distinct failure strings.
ReconstructionResult reconstruct(const pg3::Geometry& g, const PointColoring& coloring);

// Check names, in pipeline order (eq3-half only appears for odd q):
//   P1, P2, eq1, eq2, eq3, eq3-half, divisibility, per-plane-black-counts,
//   r, size-sigma, tangent-plane-census, line-duality, black-line-structure,
//   GQ-axioms, reconstruction, final-equality
Certificate verify_theorem(const pg3::Geometry& g, const PlaneFamily& fam);

// The secant-plane family of a hyperbolic quadric. Throws on other forms.
PlaneFamily forward_generate(const pg3::Geometry& g, const quadric::Form& Q);

// Re-evaluates a failed check against its recorded witness, recomputing the
// check's inputs from scratch; true if the failure reproduces.
bool witness_reproduces(const pg3::Geometry& g, const PlaneFamily& fam,
                        const CheckResult& failed);

struct SearchOutcome {
    std::int64_t scanned = 0;          // nonempty plane subsets visited
    std::int64_t p1_survivors = 0;     // subsets passing (P1)
    std::vector<PlaneFamily> survivors;  // subsets passing (P1) and (P2)
    bool all_verified = false;         // every survivor passes the full pipeline
    std::int64_t hyperbolic_forms = 0; // census over all nonzero forms
    bool survivors_match_census = false;
    bool pass = false;
};

// Scans all 2^15-1 nonempty plane subsets of PG(3,2) and compares the
// (P1)+(P2) survivors with the secant families of the hyperbolic-form census.
// The two counts come from disjoint code paths. Throws unless q = 2.
SearchOutcome exhaustive_search_q2(const pg3::Geometry& g);

}  // namespace hq::verify
