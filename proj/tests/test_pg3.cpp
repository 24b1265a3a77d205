#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hq/gf.hpp"
#include "hq/pg3.hpp"

using hq::gf::Field;
using hq::pg3::Coords;
using hq::pg3::Geometry;

namespace {

Coords tuple(const Field& f, int a, int b, int c, int d) {
    return {f.from_value(a), f.from_value(b), f.from_value(c), f.from_value(d)};
}

// Independent line counter: span every point pair with raw field arithmetic
// and group the resulting point sets. Ignores the geometry's own line tables.
int lines_by_pair_grouping(const Geometry& g) {
    const auto& f = g.field();
    auto norm_code = [&](const Coords& c) {
        int first = 0;
        while (f.is_zero(c[first])) ++first;
        auto s = f.inv(c[first]);
        std::int32_t code = 0;
        for (int k = 0; k < 4; ++k) code = code * f.q() + f.value(f.mul(c[k], s));
        return code;
    };
    std::set<std::vector<std::int32_t>> groups;
    for (std::int32_t i = 0; i < g.num_points(); ++i) {
        for (std::int32_t j = i + 1; j < g.num_points(); ++j) {
            std::vector<std::int32_t> span;
            span.push_back(norm_code(g.point(j).coords));
            for (const auto& lambda : f.elements()) {
                Coords c;
                for (int k = 0; k < 4; ++k)
                    c[k] = f.add(g.point(i).coords[k], f.mul(lambda, g.point(j).coords[k]));
                span.push_back(norm_code(c));
            }
            std::sort(span.begin(), span.end());
            groups.insert(span);
        }
    }
    return static_cast<int>(groups.size());
}

}  // namespace

TEST_CASE("point, line, and plane counts") {
    struct Row {
        int q;
        int points;
        int lines;
    };
    // line counts frozen from the pair-grouping oracle (checked below for q<=4)
    const Row rows[] = {{2, 15, 35}, {3, 40, 130}, {4, 85, 357}, {5, 156, 806}};
    for (const auto& row : rows) {
        int p = 0, e = 0;
        REQUIRE(hq::gf::prime_power(row.q, p, e));
        Geometry g(Field(p, e));
        CHECK(g.num_points() == row.points);
        CHECK(g.num_planes() == row.points);
        CHECK(g.num_lines() == row.lines);
        CHECK(g.num_lines() == (row.q * row.q + 1) * (row.q * row.q + row.q + 1));
        if (row.q <= 4) CHECK(lines_by_pair_grouping(g) == row.lines);
    }
}

TEST_CASE("enumeration is normalized, indexed, and lexicographic") {
    Geometry g{Field(2, 1)};
    const auto& f = g.field();
    for (const auto& pt : g.points()) {
        CHECK(pt.index == g.point_index(pt.coords));
        int first = 0;
        while (f.is_zero(pt.coords[first])) ++first;
        CHECK(pt.coords[first] == f.one());
    }
    CHECK(g.point(0).coords == tuple(f, 0, 0, 0, 1));
    CHECK(g.point(g.num_points() - 1).coords == tuple(f, 1, 1, 1, 1));
    // planes mirror the point enumeration
    for (std::int32_t i = 0; i < g.num_planes(); ++i)
        CHECK(g.plane(i).dual == g.point(i).coords);
}

TEST_CASE("incidence predicate") {
    Geometry g{Field(2, 1)};
    const auto& f = g.field();
    std::int32_t x = g.point_index(tuple(f, 1, 0, 0, 0));
    CHECK(g.incident(x, g.plane_index(tuple(f, 0, 0, 0, 1))));
    CHECK_FALSE(g.incident(x, g.plane_index(tuple(f, 1, 0, 0, 0))));
    for (std::int32_t pi = 0; pi < g.num_planes(); ++pi)
        CHECK(g.plane_point_set(pi).count() == 7);  // q^2+q+1 at q=2
    for (std::int32_t pt = 0; pt < g.num_points(); ++pt)
        CHECK(g.point_plane_set(pt).count() == 7);  // flag double count
}

TEST_CASE("duality: the coordinate swap reverses incidence") {
    for (int q : {2, 3}) {
        int p = 0, e = 0;
        hq::gf::prime_power(q, p, e);
        Geometry g{Field(p, e)};
        for (std::int32_t x = 0; x < g.num_points(); ++x)
            for (std::int32_t pi = 0; pi < g.num_planes(); ++pi)
                CHECK(g.incident(x, pi) == g.incident(pi, x));
    }
}

TEST_CASE("line through two points") {
    Geometry g{Field(2, 1)};
    const auto& f = g.field();
    std::int32_t a = g.point_index(tuple(f, 1, 0, 0, 0));
    std::int32_t b = g.point_index(tuple(f, 0, 1, 0, 0));
    std::int32_t l = g.line_through(a, b);
    std::vector<std::int32_t> want = {a, b, g.point_index(tuple(f, 1, 1, 0, 0))};
    std::sort(want.begin(), want.end());
    CHECK(g.line(l).points == want);
    CHECK(g.line_through(b, a) == l);
    CHECK_THROWS_AS(g.line_through(a, a), std::invalid_argument);

    for (const auto& ln : g.lines()) {
        CHECK(static_cast<int>(ln.points.size()) == g.q() + 1);
        CHECK(ln.key() == std::make_pair(ln.points[0], ln.points[1]));
    }
}

TEST_CASE("two distinct points span exactly one line") {
    Geometry g{Field(3, 1)};
    for (std::int32_t i = 0; i < g.num_points(); ++i)
        for (std::int32_t j = i + 1; j < g.num_points(); ++j) {
            std::int32_t l = g.line_through(i, j);
            const auto& pts = g.line(l).points;
            CHECK(std::binary_search(pts.begin(), pts.end(), i));
            CHECK(std::binary_search(pts.begin(), pts.end(), j));
        }
}

TEST_CASE("pencil of planes on a line") {
    for (int q : {2, 4}) {
        int p = 0, e = 0;
        hq::gf::prime_power(q, p, e);
        Geometry g{Field(p, e)};
        long long flags = 0;
        for (const auto& ln : g.lines()) {
            CHECK(static_cast<int>(ln.planes.size()) == q + 1);
            for (std::int32_t pi : ln.planes)
                for (std::int32_t x : ln.points) CHECK(g.incident(x, pi));
            flags += static_cast<long long>(ln.planes.size());
        }
        // (line, plane) flags double count: each plane carries q^2+q+1 lines
        CHECK(flags == static_cast<long long>(g.num_planes()) * (q * q + q + 1));
    }
}

TEST_CASE("plane spanned by a line and an off-line point") {
    Geometry g{Field(2, 1)};
    const auto& f = g.field();
    std::int32_t a = g.point_index(tuple(f, 1, 0, 0, 0));
    std::int32_t b = g.point_index(tuple(f, 0, 1, 0, 0));
    std::int32_t l = g.line_through(a, b);
    std::int32_t x = g.point_index(tuple(f, 0, 0, 1, 0));
    std::int32_t pi = g.plane_span(l, x);
    CHECK(pi == g.plane_index(tuple(f, 0, 0, 0, 1)));
    CHECK(g.incident(x, pi));
    for (std::int32_t pt : g.line(l).points) CHECK(g.incident(pt, pi));

    // uniqueness over the pencil
    for (std::int32_t other : g.planes_through_line(l))
        if (other != pi) CHECK_FALSE(g.incident(x, other));

    CHECK_THROWS_AS(g.plane_span(l, a), std::invalid_argument);
}

TEST_CASE("plane contents") {
    Geometry g2{Field(2, 1)};
    CHECK(g2.points_on_plane(0).size() == 7);  // a plane of PG(3,2) is a Fano plane

    Geometry g3{Field(3, 1)};
    const auto& f = g3.field();
    for (std::int32_t pi = 0; pi < g3.num_planes(); ++pi)
        CHECK(g3.lines_on_plane(pi).size() == 13);

    // exhaustive grouping of point pairs inside one plane reproduces its lines
    std::int32_t pi = g3.plane_index(tuple(f, 1, 0, 0, 0));
    auto pts = g3.points_on_plane(pi);
    std::set<std::int32_t> seen;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) seen.insert(g3.line_through(pts[a], pts[b]));
    std::set<std::int32_t> stored(g3.lines_on_plane(pi).begin(), g3.lines_on_plane(pi).end());
    CHECK(seen == stored);
}

TEST_CASE("meet of two planes") {
    Geometry g{Field(2, 1)};
    const auto& f = g.field();
    std::int32_t a = g.plane_index(tuple(f, 1, 0, 0, 0));
    std::int32_t b = g.plane_index(tuple(f, 0, 1, 0, 0));
    std::int32_t l = g.meet_planes(a, b);
    for (std::int32_t pt : g.line(l).points) {
        CHECK(f.is_zero(g.point(pt).coords[0]));
        CHECK(f.is_zero(g.point(pt).coords[1]));
    }
    CHECK_THROWS_AS(g.meet_planes(a, a), std::invalid_argument);

    // every distinct pair meets in exactly one line, and that line lies on both
    for (std::int32_t i = 0; i < g.num_planes(); ++i)
        for (std::int32_t j = i + 1; j < g.num_planes(); ++j) {
            std::int32_t m = g.meet_planes(i, j);
            CHECK(g.plane_point_set(i).count_and(g.plane_point_set(j)) == g.q() + 1);
            for (std::int32_t pt : g.line(m).points) {
                CHECK(g.incident(pt, i));
                CHECK(g.incident(pt, j));
            }
        }
}

TEST_CASE("coordinate text forms") {
    Geometry g{Field(2, 2)};
    const auto& f = g.field();
    // q=4 plane (1, alpha, 0, alpha+1) renders with trimmed digits
    Coords c = {f.one(), f.from_value(2), f.zero(), f.from_value(3)};
    CHECK(g.coords_text(c) == "1:01:0:11");

    Geometry g2{Field(2, 1)};
    std::int32_t l = g2.line_through(0, 1);
    CHECK(g2.line_text(l) == "0,1");
}
