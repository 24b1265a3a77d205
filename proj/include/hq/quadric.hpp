// quadric.hpp — quadratic forms on PG(3,q) and their plane taxonomy.
//
// A form is stored by its 10 upper-triangular coefficients a_ij (i <= j, (i,j)
// lexicographic), Q(x) = sum a_ij x_i x_j. Keeping the quadratic form itself,
// not a symmetric bilinear matrix, works uniformly in characteristic 2.
// Quadric kinds are decided by the (point count, line count) signature, which
// separates every quadric type in PG(3,q).
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hq/bitvec.hpp"
#include "hq/gf.hpp"
#include "hq/pg3.hpp"

namespace hq::quadric {

struct Form {
    // order: a00,a01,a02,a03,a11,a12,a13,a22,a23,a33
    std::array<gf::Element, 10> coeffs;

    friend bool operator==(const Form&, const Form&) = default;
};

// Index of a_ij within Form::coeffs, 0 <= i <= j <= 3.
int coeff_slot(int i, int j);

Form zero_form(const gf::Field& f);
bool is_zero_form(const gf::Field& f, const Form& Q);

// x0 x1 + x2 x3; hyperbolic in every characteristic.
Form standard_hyperbolic(const gf::Field& f);

gf::Element evaluate(const gf::Field& f, const Form& Q, const pg3::Coords& x);

// Scales so the first nonzero coefficient is 1; zero form is returned as is.
Form normalize_form(const gf::Field& f, const Form& Q);

std::string form_text(const Form& Q);

// Points of PG(3,q) where the form vanishes, ascending, plus the mask variant.
std::vector<std::int32_t> point_set(const pg3::Geometry& g, const Form& Q);
BitVec point_mask(const pg3::Geometry& g, const Form& Q);

// Lines all of whose points lie on the quadric (the generators, for
// hyperbolic forms).
std::vector<std::int32_t> lines_on(const pg3::Geometry& g, const Form& Q);

enum class Kind { Hyperbolic, Elliptic, Cone, PlanePair, OtherDegenerate };
const char* kind_name(Kind k);

struct Classification {
    std::int64_t points = 0;
    std::int64_t lines = 0;
    Kind kind = Kind::OtherDegenerate;
};

// Signature-based classification. Throws std::invalid_argument on the zero form.
Classification classify(const pg3::Geometry& g, const Form& Q);

enum class PlaneKind : std::uint8_t { Secant, Tangent };

// True if no 3 of the given points are collinear.
bool is_arc(const pg3::Geometry& g, const std::vector<std::int32_t>& pts);

// 4x4 coordinate substitutions, for transported copies of the standard form.
using Mat4 = std::array<std::array<gf::Element, 4>, 4>;
pg3::Coords apply(const gf::Field& f, const Mat4& m, const pg3::Coords& x);
bool is_invertible(const gf::Field& f, const Mat4& m);
// The form x -> Q(Mx).
Form transform(const gf::Field& f, const Form& Q, const Mat4& m);

// A hyperbolic quadric with every plane of PG(3,q) classified as secant or
// tangent. Construction verifies the hyperbolic signature and the secant/
// tangent taxonomy (q+1-arc, respectively union of two generators) and throws
// std::invalid_argument if the form is not hyperbolic.
class HyperbolicQuadric {
public:
    HyperbolicQuadric(const pg3::Geometry& g, Form Q);

    const pg3::Geometry& geometry() const { return *geom_; }
    const Form& form() const { return form_; }
    const std::vector<std::int32_t>& points() const { return points_; }
    const BitVec& mask() const { return mask_; }
    bool on_quadric(std::int32_t point) const { return mask_.test(point); }
    const std::vector<std::int32_t>& generators() const { return generators_; }

    PlaneKind plane_kind(std::int32_t plane) const { return plane_kinds_[plane]; }
    const std::vector<std::int32_t>& secant_planes() const { return secants_; }
    const std::vector<std::int32_t>& tangent_planes() const { return tangents_; }

    // q^2 for points off the quadric, q^2-q for points on it.
    int secant_count_through_point(std::int32_t point) const;
    // Takes a value in {0, q-1, q, q+1}; 0 exactly on the generators.
    int secant_count_through_line(std::int32_t line) const;

private:
    const pg3::Geometry* geom_;
    Form form_;
    std::vector<std::int32_t> points_;
    BitVec mask_;
    std::vector<std::int32_t> generators_;
    std::vector<PlaneKind> plane_kinds_;
    std::vector<std::int32_t> secants_;
    std::vector<std::int32_t> tangents_;
    BitVec secant_mask_;
};

// Basis of the space of forms vanishing on every given point, by eliminating
// the homogeneous system in the 10 coefficients. Each basis form normalized.
std::vector<Form> fit_form(const pg3::Geometry& g, const std::vector<std::int32_t>& points);

}  // namespace hq::quadric
