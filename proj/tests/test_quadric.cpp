#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "hq/gf.hpp"
#include "hq/pg3.hpp"
#include "hq/quadric.hpp"

using hq::BitVec;
using hq::gf::Field;
using hq::pg3::Coords;
using hq::pg3::Geometry;
using namespace hq::quadric;

namespace {

Geometry make_geometry(int q) {
    int p = 0, e = 0;
    REQUIRE(hq::gf::prime_power(q, p, e));
    return Geometry{Field(p, e)};
}

Coords tuple(const Field& f, int a, int b, int c, int d) {
    return {f.from_value(a), f.from_value(b), f.from_value(c), f.from_value(d)};
}

// Rank of an integer matrix mod a prime, by plain int elimination. Used as an
// independent oracle for the fit_form solution-space dimension.
int rank_mod_p(std::vector<std::vector<int>> m, int p) {
    int rank = 0;
    std::size_t ncols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < ncols; ++col) {
        int pivot = -1;
        for (std::size_t r = rank; r < m.size(); ++r)
            if (m[r][col] % p != 0) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        int inv = 0;
        for (int x = 1; x < p; ++x)
            if (m[rank][col] * x % p == 1) inv = x;
        for (auto& v : m[rank]) v = v * inv % p;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (static_cast<int>(r) == rank || m[r][col] % p == 0) continue;
            int factor = m[r][col];
            for (std::size_t c = 0; c < ncols; ++c)
                m[r][c] = ((m[r][c] - factor * m[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<int>> monomial_rows(const Geometry& g,
                                            const std::vector<std::int32_t>& pts) {
    const auto& f = g.field();
    constexpr int pairs[10][2] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
                                  {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
    std::vector<std::vector<int>> rows;
    for (std::int32_t pt : pts) {
        std::vector<int> row(10);
        for (int k = 0; k < 10; ++k)
            row[k] = f.value(f.mul(g.point(pt).coords[pairs[k][0]], g.point(pt).coords[pairs[k][1]]));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat4 permutation_matrix(const Field& f, std::array<int, 4> perm) {
    Mat4 m;
    for (auto& row : m) row.fill(f.zero());
    for (int i = 0; i < 4; ++i) m[i][perm[i]] = f.one();
    return m;
}

Mat4 random_invertible(const Geometry& g, std::mt19937& rng) {
    const auto& f = g.field();
    std::uniform_int_distribution<int> dist(0, f.q() - 1);
    while (true) {
        Mat4 m;
        for (auto& row : m)
            for (auto& cell : row) cell = f.from_value(dist(rng));
        if (is_invertible(f, m)) return m;
    }
}

}  // namespace

TEST_CASE("standard hyperbolic form: text, evaluation, zero-set sizes") {
    Geometry g = make_geometry(2);
    const auto& f = g.field();
    Form Q = standard_hyperbolic(f);
    CHECK(form_text(Q) == "0:1:0:0:0:0:0:0:1:0");

    CHECK(f.is_zero(evaluate(f, Q, tuple(f, 1, 0, 0, 0))));
    CHECK(evaluate(f, Q, tuple(f, 1, 1, 0, 0)) == f.one());

    for (int q : {2, 3, 5}) {
        Geometry gg = make_geometry(q);
        Form qq = standard_hyperbolic(gg.field());
        CHECK(static_cast<int>(point_set(gg, qq).size()) == (q + 1) * (q + 1));
    }
}

TEST_CASE("membership is representative-independent (homogeneity)") {
    Geometry g = make_geometry(3);
    const auto& f = g.field();
    Form Q = standard_hyperbolic(f);
    for (const auto& pt : g.points()) {
        bool zero_at_rep = f.is_zero(evaluate(f, Q, pt.coords));
        for (int lam = 1; lam < f.q(); ++lam) {
            Coords scaled;
            for (int k = 0; k < 4; ++k) scaled[k] = f.mul(pt.coords[k], f.from_value(lam));
            CHECK(f.is_zero(evaluate(f, Q, scaled)) == zero_at_rep);
        }
    }
}

TEST_CASE("generators: count and per-point degree") {
    for (int q : {2, 7}) {
        Geometry g = make_geometry(q);
        Form Q = standard_hyperbolic(g.field());
        auto gens = lines_on(g, Q);
        CHECK(static_cast<int>(gens.size()) == 2 * (q + 1));
        // each quadric point lies on exactly 2 generators
        std::map<std::int32_t, int> degree;
        for (std::int32_t l : gens)
            for (std::int32_t pt : g.line(l).points) ++degree[pt];
        CHECK(degree.size() == static_cast<std::size_t>((q + 1) * (q + 1)));
        for (const auto& [pt, d] : degree) CHECK(d == 2);
    }
}

TEST_CASE("generators split into two reguli") {
    for (int q : {2, 3, 4}) {
        Geometry g = make_geometry(q);
        HyperbolicQuadric hq(g, standard_hyperbolic(g.field()));
        const auto& gens = hq.generators();
        auto disjoint = [&](std::int32_t l1, std::int32_t l2) {
            const auto& a = g.line(l1).points;
            const auto& b = g.line(l2).points;
            std::vector<std::int32_t> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(common));
            return common.empty();
        };
        std::vector<std::int32_t> r1, r2;
        r1.push_back(gens[0]);
        for (std::size_t k = 1; k < gens.size(); ++k)
            (disjoint(gens[0], gens[k]) ? r1 : r2).push_back(gens[k]);
        CHECK(static_cast<int>(r1.size()) == q + 1);
        CHECK(static_cast<int>(r2.size()) == q + 1);
        for (std::size_t a = 0; a < r1.size(); ++a)
            for (std::size_t b = a + 1; b < r1.size(); ++b) CHECK(disjoint(r1[a], r1[b]));
        for (std::size_t a = 0; a < r2.size(); ++a)
            for (std::size_t b = a + 1; b < r2.size(); ++b) CHECK(disjoint(r2[a], r2[b]));
        for (std::int32_t a : r1)
            for (std::int32_t b : r2) CHECK_FALSE(disjoint(a, b));
    }
}

TEST_CASE("signature classification") {
    Geometry g = make_geometry(2);
    const auto& f = g.field();

    CHECK(classify(g, standard_hyperbolic(f)).kind == Kind::Hyperbolic);

    // x0*x1: two planes sharing a line, 2*7-3 = 11 points at q=2
    Form pair = zero_form(f);
    pair.coeffs[coeff_slot(0, 1)] = f.one();
    auto cls = classify(g, pair);
    CHECK(cls.kind == Kind::PlanePair);
    CHECK(cls.points == 11);

    // x0^2: a repeated plane, 7 points
    Form rep = zero_form(f);
    rep.coeffs[coeff_slot(0, 0)] = f.one();
    cls = classify(g, rep);
    CHECK(cls.kind == Kind::OtherDegenerate);
    CHECK(cls.points == 7);

    // x0*x1 + x2^2: quadric cone, q^2+q+1 points, q+1 lines
    Form cone = zero_form(f);
    cone.coeffs[coeff_slot(0, 1)] = f.one();
    cone.coeffs[coeff_slot(2, 2)] = f.one();
    cls = classify(g, cone);
    CHECK(cls.kind == Kind::Cone);
    CHECK(cls.points == 7);
    CHECK(cls.lines == 3);

    // x0^2 + x0x1 + x1^2 + x2x3: elliptic (x^2+x+1 irreducible over GF(2))
    Form ell = zero_form(f);
    ell.coeffs[coeff_slot(0, 0)] = f.one();
    ell.coeffs[coeff_slot(0, 1)] = f.one();
    ell.coeffs[coeff_slot(1, 1)] = f.one();
    ell.coeffs[coeff_slot(2, 3)] = f.one();
    cls = classify(g, ell);
    CHECK(cls.kind == Kind::Elliptic);
    CHECK(cls.points == 5);

    CHECK_THROWS_AS(classify(g, zero_form(f)), std::invalid_argument);
}

TEST_CASE("secant/tangent censuses") {
    struct Row {
        int q, secant, tangent;
    };
    for (const auto& row : {Row{2, 6, 9}, Row{3, 24, 16}}) {
        Geometry g = make_geometry(row.q);
        HyperbolicQuadric hq(g, standard_hyperbolic(g.field()));
        CHECK(static_cast<int>(hq.secant_planes().size()) == row.secant);
        CHECK(static_cast<int>(hq.tangent_planes().size()) == row.tangent);
        CHECK(hq.secant_planes().size() + hq.tangent_planes().size() ==
              static_cast<std::size_t>(g.num_planes()));
    }
}

TEST_CASE("secant counts through points, with the double-count identity") {
    Geometry g = make_geometry(3);
    HyperbolicQuadric hq(g, standard_hyperbolic(g.field()));
    long long sum = 0;
    for (std::int32_t x = 0; x < g.num_points(); ++x) {
        int c = hq.secant_count_through_point(x);
        CHECK(c == (hq.on_quadric(x) ? 6 : 9));  // q^2-q and q^2 at q=3
        sum += c;
    }
    CHECK(sum == 312);  // 16*6 + 24*9 = |secants| * (q^2+q+1) = 24*13
}

TEST_CASE("secant counts through lines") {
    for (int q : {2, 3}) {
        Geometry g = make_geometry(q);
        HyperbolicQuadric hq(g, standard_hyperbolic(g.field()));
        std::set<std::int32_t> gens(hq.generators().begin(), hq.generators().end());

        // independent per-line count: classify the pencil by intersection size
        for (const auto& ln : g.lines()) {
            int by_size = 0;
            for (std::int32_t pi : ln.planes)
                by_size += g.plane_point_set(pi).count_and(hq.mask()) == q + 1;
            int got = hq.secant_count_through_line(ln.index);
            CHECK(got == by_size);
            bool allowed = got == 0 || got == q - 1 || got == q || got == q + 1;
            CHECK(allowed);
            if (gens.count(ln.index)) CHECK(got == 0);
        }

        // spot values at q=3: bisecant -> q-1, external -> q+1
        if (q == 3) {
            bool saw_bisecant = false, saw_external = false;
            for (const auto& ln : g.lines()) {
                int on = 0;
                for (std::int32_t pt : ln.points) on += hq.on_quadric(pt);
                if (on == 2 && !gens.count(ln.index)) {
                    CHECK(hq.secant_count_through_line(ln.index) == 2);
                    saw_bisecant = true;
                }
                if (on == 0) {
                    CHECK(hq.secant_count_through_line(ln.index) == 4);
                    saw_external = true;
                }
            }
            CHECK(saw_bisecant);
            CHECK(saw_external);
        }
    }
}

TEST_CASE("line secant-count spectrum is invariant under coordinate permutation") {
    Geometry g = make_geometry(3);
    const auto& f = g.field();
    HyperbolicQuadric base(g, standard_hyperbolic(f));
    Form permuted = transform(f, standard_hyperbolic(f), permutation_matrix(f, {2, 1, 0, 3}));
    HyperbolicQuadric other(g, permuted);
    std::map<int, int> h1, h2;
    for (std::int32_t l = 0; l < g.num_lines(); ++l) {
        ++h1[base.secant_count_through_line(l)];
        ++h2[other.secant_count_through_line(l)];
    }
    CHECK(h1 == h2);
}

TEST_CASE("transform computes Q(Mx)") {
    for (int q : {2, 3, 4}) {
        Geometry g = make_geometry(q);
        const auto& f = g.field();
        Form Q = standard_hyperbolic(f);
        std::mt19937 rng(20240700u + static_cast<unsigned>(q));
        for (int trial = 0; trial < 3; ++trial) {
            Mat4 m = random_invertible(g, rng);
            Form QM = transform(f, Q, m);
            for (const auto& pt : g.points())
                CHECK(evaluate(f, QM, pt.coords) == evaluate(f, Q, apply(f, m, pt.coords)));
        }
    }
}

TEST_CASE("fitting the form through a point set") {
    Geometry g2 = make_geometry(2);
    const auto& f2 = g2.field();
    Form std2 = standard_hyperbolic(f2);
    auto quadric_points = point_set(g2, std2);

    // 9x10 system over GF(2) has rank 9 (independent elimination oracle)
    CHECK(rank_mod_p(monomial_rows(g2, quadric_points), 2) == 9);
    auto basis = fit_form(g2, quadric_points);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == normalize_form(f2, std2));

    // no nonzero form vanishes on all of PG(3,2): exhaust all 1023 forms
    std::vector<std::int32_t> all_points;
    for (std::int32_t i = 0; i < g2.num_points(); ++i) all_points.push_back(i);
    int vanishing_everywhere = 0;
    for (int code = 1; code < 1024; ++code) {
        Form Q = zero_form(f2);
        for (int k = 0; k < 10; ++k)
            if ((code >> k) & 1) Q.coeffs[k] = f2.one();
        bool everywhere = true;
        for (const auto& pt : g2.points())
            if (!f2.is_zero(evaluate(f2, Q, pt.coords))) {
                everywhere = false;
                break;
            }
        vanishing_everywhere += everywhere;
    }
    CHECK(vanishing_everywhere == 0);
    CHECK(fit_form(g2, all_points).empty());

    // 5 points in general position at q=3: rank 5, so dimension 10-5 = 5
    Geometry g3 = make_geometry(3);
    const auto& f3 = g3.field();
    std::vector<std::int32_t> five = {
        g3.point_index(tuple(f3, 1, 0, 0, 0)), g3.point_index(tuple(f3, 0, 1, 0, 0)),
        g3.point_index(tuple(f3, 0, 0, 1, 0)), g3.point_index(tuple(f3, 0, 0, 0, 1)),
        g3.point_index(tuple(f3, 1, 1, 1, 1))};
    CHECK(rank_mod_p(monomial_rows(g3, five), 3) == 5);
    auto basis5 = fit_form(g3, five);
    CHECK(basis5.size() == 5);

    // every returned form vanishes on every input point
    for (const auto& Q : basis5)
        for (std::int32_t pt : five) CHECK(f3.is_zero(evaluate(f3, Q, g3.point(pt).coords)));

    CHECK_THROWS_AS(fit_form(g3, {}), std::invalid_argument);
}

TEST_CASE("fit_form vanishes on random input sets") {
    Geometry g = make_geometry(4);
    const auto& f = g.field();
    std::mt19937 rng(7u);
    std::uniform_int_distribution<std::int32_t> pick(0, g.num_points() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::set<std::int32_t> pts;
        while (pts.size() < 6) pts.insert(pick(rng));
        std::vector<std::int32_t> v(pts.begin(), pts.end());
        for (const auto& Q : fit_form(g, v)) {
            CHECK_FALSE(is_zero_form(f, Q));
            for (std::int32_t pt : v) CHECK(f.is_zero(evaluate(f, Q, g.point(pt).coords)));
        }
    }
}

TEST_CASE("HyperbolicQuadric rejects non-hyperbolic forms") {
    Geometry g = make_geometry(2);
    const auto& f = g.field();
    Form cone = zero_form(f);
    cone.coeffs[coeff_slot(0, 1)] = f.one();
    cone.coeffs[coeff_slot(2, 2)] = f.one();
    CHECK_THROWS_AS(HyperbolicQuadric(g, cone), std::invalid_argument);
}

TEST_CASE("tangent plane intersections contain the generator crossing point") {
    Geometry g = make_geometry(3);
    HyperbolicQuadric hq(g, standard_hyperbolic(g.field()));
    for (std::int32_t pi : hq.tangent_planes()) {
        // gather the two generators inside the plane and check they meet
        std::vector<std::int32_t> inside;
        for (std::int32_t gen : hq.generators()) {
            bool in = true;
            for (std::int32_t pt : g.line(gen).points)
                if (!g.incident(pt, pi)) in = false;
            if (in) inside.push_back(gen);
        }
        REQUIRE(inside.size() == 2);
        const auto& a = g.line(inside[0]).points;
        const auto& b = g.line(inside[1]).points;
        std::vector<std::int32_t> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        CHECK(common.size() == 1);
        CHECK(hq.on_quadric(common[0]));
    }
}
