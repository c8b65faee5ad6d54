// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.
#include <lpont/canonical.hpp>
#include <lpont/error.hpp>
#include <lpont/io.hpp>
#include <lpont/p1.hpp>
#include <lpont/reduction.hpp>
#include <lpont/selfcheck.hpp>
#include <lpont/serialize.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace lpont;
namespace fs = std::filesystem;

namespace {

fs::path fixture(const std::string& name) {
    const char* env = std::getenv("P1_FIXTURES");
    return fs::path(env && *env ? env : LPONT_FIXTURE_DIR) / name;
}

int failures = 0;

// `body` writes its detail and returns ok; exceptions count as failures.
void criterion(int id, const std::string& title, double limit_s, const std::function<bool(std::ostream&)>& body) {
    std::ostringstream detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const Error& e) {
        detail << error_kind_name(e.kind()) << ": " << e.what();
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > limit_s) {
        ok = false;
        detail << " [over the " << limit_s << " s limit]";
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << detail.str() << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s)" << std::endl;
}

std::string suite_detail(const SuiteResult& s) {
    std::ostringstream out;
    out << s.passed << " passed, " << s.failed << " failed";
    for (const auto& f : s.failures) out << "; " << f;
    return out.str();
}

}  // namespace

int main() {
    const OrientedComplex cp2 = load_oriented(fixture("cp2_9.facets"));
    const OrientedComplex link = load_oriented(fixture("link_L.facets"));
    std::vector<Chain1> evaluated;  // cycles of criteria 7 and 8, for criterion 9

    criterion(1, "p1 of the 9-vertex CP2 is 3, and -3 reversed", 300, [&](std::ostream& out) {
        Rational a = pontryagin_number(cp2).p1;
        Rational b = pontryagin_number(cp2.reversed()).p1;
        out << "p1 = " << to_string(a) << ", reversed " << to_string(b);
        return a == 3 && b == -3;
    });

    criterion(2, "nine-move sequence reduces L to the 4-simplex boundary", 1, [&](std::ostream& out) {
        auto moves = moves_from_json(read_json_file(fixture("sequence_9.json")), link);
        auto end = replay(link, moves).back();
        out << moves.size() << " moves, end " << end.vertices().size() << " vertices, " << end.num_facets()
            << " facets";
        return moves.size() == 9 && end.vertices().size() == 5 && end.num_facets() == 5 && is_simplex_boundary(end);
    });

    criterion(3, "all vertex links of CP2 are isomorphic to L", 10, [&](std::ostream& out) {
        int iso = 0, same = 0;
        for (Vertex v : cp2.vertices()) {
            auto lk = oriented_link(cp2, v);
            bool pos = iso_generic(lk, link, true).has_value();
            if (pos || iso_generic(lk, link, false)) ++iso;
            same += pos;
        }
        out << iso << " of " << cp2.vertices().size() << " isomorphic (" << same << " orientation preserving)";
        return cp2.vertices().size() == 9 && iso == 9;
    });

    criterion(4, "p1 of the boundary of the 5-simplex is 0", 1, [&](std::ostream& out) {
        Rational p = pontryagin_number(load_oriented(fixture("boundary_d5.facets"))).p1;
        out << "p1 = " << to_string(p);
        return p == 0;
    });

    criterion(5, "d = delta s + s delta on random moves", 60, [&](std::ostream& out) {
        auto s = homotopy_suite(2024, 120);
        out << suite_detail(s);
        return s.failed == 0 && s.passed >= 100;
    });

    criterion(6, "delta delta f = 0 on 4-spheres", 60, [&](std::ostream& out) {
        auto s = delta_squared_suite(2024, 24);
        out << suite_detail(s);
        return s.failed == 0 && s.passed >= 20;
    });

    criterion(7, "generator value table", 60, [&](std::ostream& out) {
        auto s = value_table_suite(&evaluated);
        out << suite_detail(s);
        return s.ok();
    });

    criterion(8, "c0 of the CP2 cycle under three reduction seeds and three solve orders", 600, [&](std::ostream& out) {
        bool ok = true;
        for (std::uint64_t seed : {11, 23, 37}) {
            P1Config cfg;
            cfg.reduction.seed = seed;
            auto r = pontryagin_number(cp2, cfg);
            evaluated.push_back(r.cycle);
            out << "seed " << seed << ":";
            for (std::uint64_t shuffle : {0, 101, 202, 303}) {
                SolverConfig sc;
                sc.shuffle_seed = shuffle;
                Rational v = evaluate_c0(r.cycle, sc).value;
                out << ' ' << to_string(v);
                ok = ok && v == 6;
            }
            out << "; ";
        }
        return ok;
    });

    criterion(9, "c0 is mirror equivariant on the cycles above and on random loops", 300, [&](std::ostream& out) {
        int good = 0;
        for (const auto& c : evaluated) good += evaluate_c0(mirror_chain(c)).value == -evaluate_c0(c).value;
        auto s = equivariance_suite(2024);
        out << good << " of " << evaluated.size() << " cycles; random loops " << suite_detail(s);
        return evaluated.size() >= 7 && good == static_cast<int>(evaluated.size()) && s.ok();
    });

    criterion(10, "flipped link orientation breaks the identity (expected failure)", 60, [&](std::ostream& out) {
        auto s = homotopy_suite(2024, 120, LinkConvention::Flipped);
        out << s.failed << " of " << s.passed + s.failed << " pairs fail";
        return s.failed > 0;
    });

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures;
}
