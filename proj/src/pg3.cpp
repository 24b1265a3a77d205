#include "hq/pg3.hpp"

#include <algorithm>
#include <stdexcept>

#include "hq/linalg.hpp"

namespace hq::pg3 {

Geometry::Geometry(gf::Field field) : field_(std::move(field)) {
    const int q = field_.q();
    const auto elems = field_.elements();
    const std::int32_t n = static_cast<std::int32_t>(q) * q * q + q * q + q + 1;

    // Points and planes share one enumeration: all normalized tuples in
    // lexicographic order, x0 most significant.
    lookup_.assign(static_cast<std::size_t>(q) * q * q * q, -1);
    points_.reserve(n);
    planes_.reserve(n);
    for (int v0 = 0; v0 < q; ++v0)
        for (int v1 = 0; v1 < q; ++v1)
            for (int v2 = 0; v2 < q; ++v2)
                for (int v3 = 0; v3 < q; ++v3) {
                    Coords c = {elems[v0], elems[v1], elems[v2], elems[v3]};
                    int first = 0;
                    while (first < 4 && field_.is_zero(c[first])) ++first;
                    if (first == 4) continue;            // zero tuple
                    if (c[first] != field_.one()) continue;  // not the canonical rep
                    std::int32_t idx = static_cast<std::int32_t>(points_.size());
                    points_.push_back({c, idx});
                    planes_.push_back({c, idx});
                    lookup_[coords_code(c)] = idx;
                }
    if (static_cast<std::int32_t>(points_.size()) != n)
        throw std::logic_error("point enumeration count mismatch");

    // Incidence bitsets.
    plane_points_.assign(n, BitVec(n));
    point_planes_.assign(n, BitVec(n));
    for (std::int32_t pi = 0; pi < n; ++pi)
        for (std::int32_t x = 0; x < n; ++x)
            if (field_.is_zero(dot(planes_[pi].dual, points_[x].coords))) {
                plane_points_[pi].set(x);
                point_planes_[x].set(pi);
            }

    // Lines, discovered in ascending key order by walking point pairs.
    line_table_.assign(static_cast<std::size_t>(n) * n, -1);
    for (std::int32_t i = 0; i < n; ++i) {
        for (std::int32_t j = i + 1; j < n; ++j) {
            if (line_table_[static_cast<std::size_t>(i) * n + j] >= 0) continue;
            Line ln;
            ln.index = static_cast<std::int32_t>(lines_.size());
            ln.points.reserve(q + 1);
            ln.points.push_back(j);  // the lambda = "infinity" member
            for (const auto& lambda : elems) {
                Coords c;
                for (int k = 0; k < 4; ++k)
                    c[k] = field_.add(points_[i].coords[k],
                                      field_.mul(lambda, points_[j].coords[k]));
                ln.points.push_back(lookup_[coords_code(normalize(c))]);
            }
            std::sort(ln.points.begin(), ln.points.end());
            for (std::size_t a = 0; a < ln.points.size(); ++a)
                for (std::size_t b = a + 1; b < ln.points.size(); ++b) {
                    std::int32_t pa = ln.points[a], pb = ln.points[b];
                    line_table_[static_cast<std::size_t>(pa) * n + pb] = ln.index;
                    line_table_[static_cast<std::size_t>(pb) * n + pa] = ln.index;
                }
            ln.planes = point_planes_[ln.points[0]].indices_and(point_planes_[ln.points[1]]);
            lines_.push_back(std::move(ln));
        }
    }

    plane_lines_.assign(n, {});
    for (const auto& ln : lines_)
        for (std::int32_t pi : ln.planes) plane_lines_[pi].push_back(ln.index);
}

gf::Element Geometry::dot(const Coords& a, const Coords& b) const {
    gf::Element s = field_.zero();
    for (int k = 0; k < 4; ++k) s = field_.add(s, field_.mul(a[k], b[k]));
    return s;
}

std::int32_t Geometry::coords_code(const Coords& c) const {
    const int q = field_.q();
    std::int32_t code = 0;
    for (int k = 0; k < 4; ++k) code = code * q + field_.value(c[k]);
    return code;
}

Coords Geometry::normalize(const Coords& c) const {
    int first = 0;
    while (first < 4 && field_.is_zero(c[first])) ++first;
    if (first == 4) throw std::invalid_argument("cannot normalize the zero tuple");
    gf::Element scale = field_.inv(c[first]);
    Coords out;
    for (int k = 0; k < 4; ++k) out[k] = field_.mul(c[k], scale);
    return out;
}

std::int32_t Geometry::point_index(const Coords& c) const {
    return lookup_[coords_code(normalize(c))];
}

std::int32_t Geometry::plane_index(const Coords& c) const { return point_index(c); }

std::int32_t Geometry::line_through(std::int32_t p1, std::int32_t p2) const {
    if (p1 == p2) throw std::invalid_argument("line_through needs two distinct points");
    return line_table_[static_cast<std::size_t>(p1) * num_points() + p2];
}

std::int32_t Geometry::plane_span(std::int32_t l, std::int32_t point) const {
    const Line& ln = lines_[l];
    if (std::binary_search(ln.points.begin(), ln.points.end(), point))
        throw std::invalid_argument("plane_span: point lies on the line");
    for (std::int32_t pi : ln.planes)
        if (incident(point, pi)) return pi;
    throw std::logic_error("no plane spans the line and point");  // unreachable
}

std::int32_t Geometry::meet_planes(std::int32_t a, std::int32_t b) const {
    if (a == b) throw std::invalid_argument("meet_planes needs two distinct planes");
    linalg::Matrix m = {
        {planes_[a].dual.begin(), planes_[a].dual.end()},
        {planes_[b].dual.begin(), planes_[b].dual.end()},
    };
    auto basis = linalg::nullspace(field_, std::move(m), 4);
    if (basis.size() != 2) throw std::logic_error("plane meet is not a line");
    Coords c1 = {basis[0][0], basis[0][1], basis[0][2], basis[0][3]};
    Coords c2 = {basis[1][0], basis[1][1], basis[1][2], basis[1][3]};
    return line_through(point_index(c1), point_index(c2));
}

std::string Geometry::coords_text(const Coords& c) const {
    std::string s;
    for (int k = 0; k < 4; ++k) {
        if (k) s += ':';
        s += field_.to_string(c[k]);
    }
    return s;
}

}  // namespace hq::pg3
