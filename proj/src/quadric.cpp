#include "hq/quadric.hpp"

#include <algorithm>
#include <stdexcept>

#include "hq/linalg.hpp"

namespace hq::quadric {

namespace {

constexpr int kPairs[10][2] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
                               {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};

}  // namespace

int coeff_slot(int i, int j) {
    for (int k = 0; k < 10; ++k)
        if (kPairs[k][0] == i && kPairs[k][1] == j) return k;
    throw std::invalid_argument("coefficient indices must satisfy 0 <= i <= j <= 3");
}

Form zero_form(const gf::Field& f) {
    Form Q;
    Q.coeffs.fill(f.zero());
    return Q;
}

bool is_zero_form(const gf::Field& f, const Form& Q) {
    for (const auto& c : Q.coeffs)
        if (!f.is_zero(c)) return false;
    return true;
}

Form standard_hyperbolic(const gf::Field& f) {
    Form Q = zero_form(f);
    Q.coeffs[coeff_slot(0, 1)] = f.one();
    Q.coeffs[coeff_slot(2, 3)] = f.one();
    return Q;
}

gf::Element evaluate(const gf::Field& f, const Form& Q, const pg3::Coords& x) {
    gf::Element s = f.zero();
    for (int k = 0; k < 10; ++k) {
        if (f.is_zero(Q.coeffs[k])) continue;
        s = f.add(s, f.mul(Q.coeffs[k], f.mul(x[kPairs[k][0]], x[kPairs[k][1]])));
    }
    return s;
}

Form normalize_form(const gf::Field& f, const Form& Q) {
    int first = 0;
    while (first < 10 && f.is_zero(Q.coeffs[first])) ++first;
    if (first == 10) return Q;
    gf::Element scale = f.inv(Q.coeffs[first]);
    Form out = Q;
    for (auto& c : out.coeffs) c = f.mul(c, scale);
    return out;
}

std::string form_text(const Form& Q) {
    std::string s;
    for (int k = 0; k < 10; ++k) {
        if (k) s += ':';
        s += gf::element_text(Q.coeffs[k]);
    }
    return s;
}

BitVec point_mask(const pg3::Geometry& g, const Form& Q) {
    const auto& f = g.field();
    BitVec mask(g.num_points());
    for (const auto& pt : g.points())
        if (f.is_zero(evaluate(f, Q, pt.coords))) mask.set(pt.index);
    return mask;
}

std::vector<std::int32_t> point_set(const pg3::Geometry& g, const Form& Q) {
    return point_mask(g, Q).to_indices();
}

namespace {

std::vector<std::int32_t> lines_inside(const pg3::Geometry& g, const BitVec& mask) {
    std::vector<std::int32_t> out;
    for (const auto& ln : g.lines()) {
        bool inside = true;
        for (std::int32_t pt : ln.points)
            if (!mask.test(pt)) {
                inside = false;
                break;
            }
        if (inside) out.push_back(ln.index);
    }
    return out;
}

}  // namespace

std::vector<std::int32_t> lines_on(const pg3::Geometry& g, const Form& Q) {
    return lines_inside(g, point_mask(g, Q));
}

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Hyperbolic: return "hyperbolic";
        case Kind::Elliptic: return "elliptic";
        case Kind::Cone: return "cone";
        case Kind::PlanePair: return "plane-pair";
        case Kind::OtherDegenerate: return "other-degenerate";
    }
    return "?";
}

Classification classify(const pg3::Geometry& g, const Form& Q) {
    const auto& f = g.field();
    if (is_zero_form(f, Q)) throw std::invalid_argument("cannot classify the zero form");
    const std::int64_t q = g.q();
    BitVec mask = point_mask(g, Q);
    Classification out;
    out.points = mask.count();
    out.lines = static_cast<std::int64_t>(lines_inside(g, mask).size());
    if (out.points == (q + 1) * (q + 1) && out.lines == 2 * (q + 1))
        out.kind = Kind::Hyperbolic;
    else if (out.points == q * q + 1 && out.lines == 0)
        out.kind = Kind::Elliptic;
    else if (out.points == q * q + q + 1 && out.lines == q + 1)
        out.kind = Kind::Cone;
    else if (out.points == 2 * q * q + q + 1 && out.lines == 2 * q * q + 2 * q + 1)
        out.kind = Kind::PlanePair;
    else
        out.kind = Kind::OtherDegenerate;
    return out;
}

bool is_arc(const pg3::Geometry& g, const std::vector<std::int32_t>& pts) {
    std::vector<char> member(g.num_points(), 0);
    for (std::int32_t p : pts) member[p] = 1;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            int on_line = 0;
            for (std::int32_t p : g.line(g.line_through(pts[a], pts[b])).points)
                on_line += member[p];
            if (on_line >= 3) return false;
        }
    return true;
}

pg3::Coords apply(const gf::Field& f, const Mat4& m, const pg3::Coords& x) {
    pg3::Coords y;
    for (int i = 0; i < 4; ++i) {
        y[i] = f.zero();
        for (int j = 0; j < 4; ++j) y[i] = f.add(y[i], f.mul(m[i][j], x[j]));
    }
    return y;
}

bool is_invertible(const gf::Field& f, const Mat4& m) {
    linalg::Matrix rows;
    for (const auto& r : m) rows.emplace_back(r.begin(), r.end());
    return linalg::rank(f, rows) == 4;
}

Form transform(const gf::Field& f, const Form& Q, const Mat4& m) {
    // B = M^T U M with U the upper-triangular coefficient matrix, then fold
    // back to upper-triangular: a'_rc = B_rc + B_cr (r < c), a'_rr = B_rr.
    std::array<std::array<gf::Element, 4>, 4> U;
    for (auto& row : U) row.fill(f.zero());
    for (int k = 0; k < 10; ++k) U[kPairs[k][0]][kPairs[k][1]] = Q.coeffs[k];

    std::array<std::array<gf::Element, 4>, 4> B;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            B[r][c] = f.zero();
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    B[r][c] = f.add(B[r][c], f.mul(m[i][r], f.mul(U[i][j], m[j][c])));
        }

    Form out = zero_form(f);
    for (int k = 0; k < 10; ++k) {
        int r = kPairs[k][0], c = kPairs[k][1];
        out.coeffs[k] = (r == c) ? B[r][r] : f.add(B[r][c], B[c][r]);
    }
    return out;
}

HyperbolicQuadric::HyperbolicQuadric(const pg3::Geometry& g, Form Q)
    : geom_(&g), form_(std::move(Q)), mask_(g.num_points()), secant_mask_(g.num_planes()) {
    const int q = g.q();

    mask_ = point_mask(g, form_);
    points_ = mask_.to_indices();
    generators_ = lines_inside(g, mask_);
    if (static_cast<int>(points_.size()) != (q + 1) * (q + 1) ||
        static_cast<int>(generators_.size()) != 2 * (q + 1))
        throw std::invalid_argument("form is not a hyperbolic quadric (kind: " +
                                    std::string(kind_name(classify(g, form_).kind)) + ")");

    std::vector<char> is_generator_plane_point(g.num_points(), 0);
    plane_kinds_.resize(g.num_planes());
    for (std::int32_t pi = 0; pi < g.num_planes(); ++pi) {
        auto inter = g.plane_point_set(pi).indices_and(mask_);
        if (static_cast<int>(inter.size()) == q + 1 && is_arc(g, inter)) {
            plane_kinds_[pi] = PlaneKind::Secant;
            secants_.push_back(pi);
            secant_mask_.set(pi);
            continue;
        }
        if (static_cast<int>(inter.size()) == 2 * q + 1) {
            // must be the union of two (necessarily intersecting) generators
            std::vector<std::int32_t> inside;
            for (std::int32_t gen : generators_) {
                bool in_plane = true;
                for (std::int32_t pt : g.line(gen).points)
                    if (!g.incident(pt, pi)) {
                        in_plane = false;
                        break;
                    }
                if (in_plane) inside.push_back(gen);
            }
            if (inside.size() == 2) {
                std::fill(is_generator_plane_point.begin(), is_generator_plane_point.end(), 0);
                for (std::int32_t gen : inside)
                    for (std::int32_t pt : g.line(gen).points) is_generator_plane_point[pt] = 1;
                bool covered = true;
                for (std::int32_t pt : inter)
                    if (!is_generator_plane_point[pt]) {
                        covered = false;
                        break;
                    }
                if (covered) {
                    plane_kinds_[pi] = PlaneKind::Tangent;
                    tangents_.push_back(pi);
                    continue;
                }
            }
        }
        throw std::logic_error("plane intersection fits neither the secant nor tangent shape");
    }
}

int HyperbolicQuadric::secant_count_through_point(std::int32_t point) const {
    return geom_->point_plane_set(point).count_and(secant_mask_);
}

int HyperbolicQuadric::secant_count_through_line(std::int32_t line) const {
    int c = 0;
    for (std::int32_t pi : geom_->line(line).planes) c += secant_mask_.test(pi);
    return c;
}

std::vector<Form> fit_form(const pg3::Geometry& g, const std::vector<std::int32_t>& points) {
    if (points.empty()) throw std::invalid_argument("fit_form needs at least one point");
    const auto& f = g.field();
    linalg::Matrix m;
    m.reserve(points.size());
    for (std::int32_t pt : points) {
        const auto& x = g.point(pt).coords;
        linalg::Row row(10, f.zero());
        for (int k = 0; k < 10; ++k) row[k] = f.mul(x[kPairs[k][0]], x[kPairs[k][1]]);
        m.push_back(std::move(row));
    }
    std::vector<Form> out;
    for (const auto& v : linalg::nullspace(f, std::move(m), 10)) {
        Form Q;
        std::copy(v.begin(), v.end(), Q.coeffs.begin());
        out.push_back(normalize_form(f, Q));
    }
    return out;
}

}  // namespace hq::quadric
