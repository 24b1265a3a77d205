// hqplanes — generate, verify, and census plane families of PG(3,q) against
// hyperbolic quadrics.
//
// Subcommands:
//   gen      write the secant-plane family of the standard hyperbolic quadric
//   verify   run the full characterization pipeline on a family file
//   stats    print the measured census against the closed-form counts
//   search   scan all nonempty plane subsets of PG(3,2)
//   selftest exhaustive field-axiom and small-geometry checks
//
// Exit codes: 0 success, 1 a check failed, 2 usage/parse error, 3 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "hq/family_io.hpp"
#include "hq/gf.hpp"
#include "hq/pg3.hpp"
#include "hq/quadric.hpp"
#include "hq/verify.hpp"

namespace {

using hq::gf::Field;
using hq::pg3::Geometry;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct RunConfig {
    int q = 0;
    std::string input;
    std::string output;
    std::string report;
    std::string format = "text";  // "text" or "json"
    int max_q = 16;
};

Field field_for(int q) {
    int p = 0, e = 0;
    if (!hq::gf::prime_power(q, p, e))
        throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
    return Field(p, e);
}

int run_gen(const RunConfig& cfg) {
    Geometry g{field_for(cfg.q)};
    auto fam = hq::verify::forward_generate(g, hq::quadric::standard_hyperbolic(g.field()));
    hq::io::write_file(cfg.output, hq::io::family_text(g, fam));
    std::cout << "wrote " << fam.members.size() << " planes to " << cfg.output << "\n";
    return kExitOk;
}

int run_verify(const RunConfig& cfg) {
    Geometry g{field_for(cfg.q)};
    auto fam = hq::io::load_family(g, cfg.input);
    auto cert = hq::verify::verify_theorem(g, fam);
    std::string doc = cfg.format == "json" ? hq::io::certificate_json(cert)
                                           : hq::io::certificate_text(cert);
    std::cout << doc;
    if (!cfg.report.empty()) hq::io::write_file(cfg.report, doc);
    return cert.overall_pass ? kExitOk : kExitCheckFailed;
}

int run_stats(const RunConfig& cfg) {
    Geometry g{field_for(cfg.q)};
    const long long q = cfg.q;
    hq::quadric::HyperbolicQuadric quad(g, hq::quadric::standard_hyperbolic(g.field()));

    bool all_ok = true;
    auto row = [&](const char* name, long long measured, long long expected) {
        bool ok = measured == expected;
        all_ok = all_ok && ok;
        std::printf("%-22s %8lld  expected %8lld  %s\n", name, measured, expected,
                    ok ? "ok" : "MISMATCH");
    };

    std::printf("PG(3,%s) census\n", g.field().name().c_str());
    row("points", g.num_points(), q * q * q + q * q + q + 1);
    row("lines", g.num_lines(), (q * q + 1) * (q * q + q + 1));
    row("planes", g.num_planes(), (q * q + 1) * (q + 1));
    row("quadric points", static_cast<long long>(quad.points().size()), (q + 1) * (q + 1));
    row("generators", static_cast<long long>(quad.generators().size()), 2 * (q + 1));
    row("secant planes", static_cast<long long>(quad.secant_planes().size()), q * q * q - q);
    row("tangent planes", static_cast<long long>(quad.tangent_planes().size()), (q + 1) * (q + 1));

    long long on_bad = 0, off_bad = 0;
    for (std::int32_t x = 0; x < g.num_points(); ++x) {
        int c = quad.secant_count_through_point(x);
        if (quad.on_quadric(x) && c != q * q - q) ++on_bad;
        if (!quad.on_quadric(x) && c != q * q) ++off_bad;
    }
    row("on-quadric count errors", on_bad, 0);
    row("off-quadric count errors", off_bad, 0);
    std::printf("%-22s on-quadric %lld, off-quadric %lld\n", "point secant counts",
                q * q - q, q * q);

    std::map<int, long long> spectrum;
    bool spectrum_ok = true;
    for (std::int32_t l = 0; l < g.num_lines(); ++l) {
        int c = quad.secant_count_through_line(l);
        ++spectrum[c];
        if (c != 0 && c != q - 1 && c != q && c != q + 1) spectrum_ok = false;
    }
    all_ok = all_ok && spectrum_ok;
    std::printf("%-22s", "line secant spectrum");
    for (const auto& [value, count] : spectrum) std::printf(" %d:x%lld", value, count);
    std::printf("  within {0,%lld,%lld,%lld} %s\n", q - 1, q, q + 1,
                spectrum_ok ? "ok" : "MISMATCH");

    std::printf("census %s\n", all_ok ? "pass" : "fail");
    return all_ok ? kExitOk : kExitCheckFailed;
}

int run_search(const RunConfig& cfg) {
    if (cfg.q != 2) throw std::invalid_argument("search supports q = 2 only");
    Geometry g{field_for(2)};
    auto out = hq::verify::exhaustive_search_q2(g);
    std::printf("subsets scanned        %lld\n", static_cast<long long>(out.scanned));
    std::printf("(P1) survivors         %lld\n", static_cast<long long>(out.p1_survivors));
    std::printf("(P1)+(P2) survivors    %zu\n", out.survivors.size());
    std::printf("all survivors verified %s\n", out.all_verified ? "yes" : "NO");
    std::printf("hyperbolic form census %lld\n", static_cast<long long>(out.hyperbolic_forms));
    std::printf("survivors = secant families of hyperbolic quadrics: %s\n",
                out.survivors_match_census ? "yes" : "NO");
    std::printf("search %s\n", out.pass ? "pass" : "fail");
    return out.pass ? kExitOk : kExitCheckFailed;
}

int run_selftest(const RunConfig& cfg) {
    if (cfg.max_q < 2 || cfg.max_q > 16)
        throw std::invalid_argument("--max-q must lie in [2, 16]");
    bool all_ok = true;
    auto report = [&](const std::string& what, bool ok) {
        std::printf("%-34s %s\n", what.c_str(), ok ? "pass" : "FAIL");
        all_ok = all_ok && ok;
    };

    for (int q = 2; q <= cfg.max_q; ++q) {
        int p = 0, e = 0;
        if (!hq::gf::prime_power(q, p, e)) continue;
        Field f(p, e);
        auto elems = f.elements();
        bool ok = static_cast<int>(elems.size()) == q && elems[0] == f.zero() &&
                  elems[1] == f.one();
        for (int v = 0; v < q; ++v) ok = ok && f.value(elems[v]) == v;
        for (const auto& a : elems) {
            ok = ok && f.add(a, f.zero()) == a && f.mul(a, f.one()) == a;
            ok = ok && f.add(a, f.neg(a)) == f.zero();
            if (!f.is_zero(a)) {
                ok = ok && f.mul(a, f.inv(a)) == f.one();
                ok = ok && f.pow(a, q - 1) == f.one();
            }
            for (const auto& b : elems) {
                ok = ok && f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
                for (const auto& c : elems) {
                    ok = ok && f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
                    ok = ok && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
                    ok = ok && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                }
            }
            auto back = f.parse(f.to_string(a));
            ok = ok && back.has_value() && *back == a;
        }
        report("GF(" + f.name() + ") field axioms", ok);
    }

    for (int q = 2; q <= std::min(cfg.max_q, 5); ++q) {
        int p = 0, e = 0;
        if (!hq::gf::prime_power(q, p, e)) continue;
        Geometry g{Field(p, e)};
        long long n = static_cast<long long>(q) * q * q + static_cast<long long>(q) * q + q + 1;
        bool ok = g.num_points() == n && g.num_planes() == n &&
                  g.num_lines() == (static_cast<long long>(q) * q + 1) * (q * q + q + 1);
        for (const auto& ln : g.lines())
            ok = ok && static_cast<int>(ln.points.size()) == q + 1 &&
                 static_cast<int>(ln.planes.size()) == q + 1;
        report("PG(3," + g.field().name() + ") counts", ok);

        auto fam = hq::verify::forward_generate(g, hq::quadric::standard_hyperbolic(g.field()));
        auto cert = hq::verify::verify_theorem(g, fam);
        report("PG(3," + g.field().name() + ") forward verification", cert.overall_pass);
    }

    std::printf("selftest %s\n", all_ok ? "pass" : "fail");
    return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane families of PG(3,q) and hyperbolic quadrics"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* gen = app.add_subcommand("gen", "write the secant family of the standard quadric");
    gen->add_option("--q", cfg.q, "field order (prime power <= 16)")->required();
    gen->add_option("--out", cfg.output, "output family file")->required();

    auto* verify = app.add_subcommand("verify", "verify a family file and emit a certificate");
    verify->add_option("--q", cfg.q, "field order (prime power <= 16)")->required();
    verify->add_option("--in", cfg.input, "input family file")->required();
    verify->add_option("--report", cfg.report, "also write the certificate here");
    verify->add_option("--format", cfg.format, "certificate format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* stats = app.add_subcommand("stats", "print the census for PG(3,q)");
    stats->add_option("--q", cfg.q, "field order (prime power <= 16)")->required();

    auto* search = app.add_subcommand("search", "exhaustive subset scan (q = 2)");
    search->add_option("--q", cfg.q, "must be 2")->required();

    auto* selftest = app.add_subcommand("selftest", "field axioms and small-geometry checks");
    selftest->add_option("--max-q", cfg.max_q, "largest field order to test (<= 16)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(cfg);
        if (verify->parsed()) return run_verify(cfg);
        if (stats->parsed()) return run_stats(cfg);
        if (search->parsed()) return run_search(cfg);
        if (selftest->parsed()) return run_selftest(cfg);
    } catch (const hq::io::ParseError& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const hq::io::FileError& err) {
        std::cerr << "io error: " << err.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
