#include <lpont/error.hpp>
#include <lpont/io.hpp>
#include <lpont/p1.hpp>
#include <lpont/reduction.hpp>
#include <lpont/selfcheck.hpp>
#include <lpont/serialize.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace lpont;
namespace fs = std::filesystem;

namespace {

struct Options {
    std::string input;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool json = false;
    bool certificate = false;
    long max_steps = ReductionConfig{}.max_steps;
    int restarts = ReductionConfig{}.restarts;
    int radius_max = SolverConfig{}.radius_max;
    bool reverse = false;
    std::string cycle_out;
};

fs::path fixture_dir() {
    if (const char* env = std::getenv("P1_FIXTURES"); env && *env) return env;
    return LPONT_FIXTURE_DIR;
}

// Paths that do not exist are retried inside the fixture directory, first as given
// and then by file name, so `p1 fixtures/cp2_9.facets` works from anywhere.
fs::path resolve(const std::string& p) {
    fs::path path(p);
    if (fs::exists(path) || path.is_absolute()) return path;
    for (const fs::path& c : {fixture_dir() / path, fixture_dir() / path.filename()})
        if (fs::exists(c)) return c;
    return path;
}

ReductionConfig reduction_config(const Options& o) {
    ReductionConfig c;
    c.seed = o.seed;
    c.max_steps = o.max_steps;
    c.restarts = o.restarts;
    return c;
}

SolverConfig solver_config(const Options& o) {
    SolverConfig c;
    c.radius_max = o.radius_max;
    c.shuffle_seed = o.seed;
    return c;
}

OrientedComplex load_input(const Options& o) {
    OrientedComplex k = load_oriented(resolve(o.input));
    return o.reverse ? k.reversed() : k;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int run_verify(const Options& o) {
    auto k = load_input(o);
    auto report = verify_4manifold(k, reduction_config(o), o.jobs);
    if (o.json) {
        Json j;
        j["manifold"] = report.ok();
        Json links = Json::array();
        for (const auto& l : report.links) {
            Json x;
            x["vertex"] = l.vertex;
            x["vertices"] = l.vertices;
            x["facets"] = l.facets;
            x["certified"] = l.certified;
            if (l.certified) x["moves"] = l.moves.size();
            else x["error"] = l.error;
            links.push_back(std::move(x));
        }
        j["links"] = std::move(links);
        print(j);
    } else {
        for (const auto& l : report.links) {
            std::cout << "vertex " << l.vertex << ": " << l.vertices << " vertices, " << l.facets << " facets, ";
            if (l.certified) std::cout << "sphere (" << l.moves.size() << " moves)\n";
            else std::cout << "not certified: " << l.error << '\n';
        }
        std::cout << (report.ok() ? "combinatorial 4-manifold" : "not certified") << '\n';
    }
    return report.ok() ? 0 : 1;
}

int run_reduce(const Options& o) {
    auto k = load_input(o);
    auto seq = reduce_sphere(k, reduction_config(o));
    auto end = verify_sequence(k, seq);
    if (o.json) {
        Json j;
        j["dim"] = k.dim();
        j["initial"] = {{"vertices", k.vertices().size()}, {"facets", k.num_facets()}};
        j["moves"] = moves_to_json(seq.moves);
        j["final"] = {{"vertices", end.vertices().size()}, {"facets", end.num_facets()}};
        print(j);
    } else {
        for (const auto& m : seq.moves) std::cout << m.delta1.str() << " -> " << m.delta2.str() << '\n';
        std::cout << seq.moves.size() << " moves to the boundary of the " << k.dim() + 1 << "-simplex\n";
    }
    return 0;
}

int run_p1(const Options& o) {
    auto k = load_input(o);
    P1Config cfg;
    cfg.reduction = reduction_config(o);
    cfg.solver = solver_config(o);
    cfg.jobs = o.jobs;
    auto r = pontryagin_number(k, cfg);
    if (!o.cycle_out.empty()) {
        std::ofstream out(o.cycle_out);
        if (!out) throw Error(ErrorKind::Parse, "cannot write " + o.cycle_out);
        out << to_json(r.cycle).dump(2) << '\n';
    }
    if (o.json) {
        print(to_json(r, o.certificate));
    } else {
        std::cout << to_string(r.p1) << '\n';
        if (o.certificate) print(to_json(r.solve.certificate));
    }
    return 0;
}

int run_c0(const Options& o) {
    Json j = read_json_file(resolve(o.input));
    if (j.is_object()) j = j.contains("cycle") ? j.at("cycle") : j.at("chain");
    auto r = evaluate_c0(chain_from_json(j), solver_config(o));
    if (o.json) {
        Json out;
        out["c0"] = to_string(r.value);
        out["radius_used"] = r.radius_used;
        out["candidates"] = r.candidates;
        out["rank"] = r.rank;
        if (o.certificate) out["certificate"] = to_json(r.certificate);
        print(out);
    } else {
        std::cout << to_string(r.value) << '\n';
        if (o.certificate) print(to_json(r.certificate));
    }
    return 0;
}

SuiteResult fixture_suite() {
    SuiteResult r;
    r.name = "fixture replay";
    auto l = load_oriented(fixture_dir() / "link_L.facets");
    auto moves = moves_from_json(read_json_file(fixture_dir() / "sequence_9.json"), l);
    auto end = replay(l, moves).back();
    if (moves.size() == 9 && is_simplex_boundary(end)) {
        ++r.passed;
    } else {
        ++r.failed;
        r.failures.push_back("sequence does not end at the simplex boundary");
    }
    auto k = load_oriented(fixture_dir() / "cp2_9.facets");
    for (Vertex v : k.vertices()) {
        auto lk = oriented_link(k, v);
        if (iso_generic(lk, l, true) || iso_generic(lk, l, false)) {
            ++r.passed;
        } else {
            ++r.failed;
            r.failures.push_back("link of " + std::to_string(v) + " is not L");
        }
    }
    return r;
}

int run_selfcheck(const Options& o) {
    std::vector<SuiteResult> suites;
    suites.push_back(homotopy_suite(o.seed));
    suites.push_back(delta_squared_suite(o.seed));
    suites.push_back(value_table_suite());
    suites.push_back(equivariance_suite(o.seed));
    suites.push_back(fixture_suite());
    bool ok = true;
    Json j = Json::array();
    for (const auto& s : suites) {
        ok = ok && s.ok();
        if (o.json) {
            j.push_back({{"suite", s.name}, {"passed", s.passed}, {"failed", s.failed}, {"failures", s.failures}});
            continue;
        }
        std::cout << s.name << ": " << s.passed << " passed, " << s.failed << " failed\n";
        for (const auto& f : s.failures) std::cout << "  " << f << '\n';
    }
    if (o.json) print({{"ok", ok}, {"suites", j}});
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"First rational Pontryagin number of triangulated 4-manifolds"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "Seed for all randomized steps");
        sub->add_flag("--json", o.json, "Print JSON");
    };
    auto reduction = [&](CLI::App* sub) {
        sub->add_option("--max-steps", o.max_steps, "Annealing steps per restart")->check(CLI::PositiveNumber);
        sub->add_option("--restarts", o.restarts, "Annealing restarts")->check(CLI::PositiveNumber);
    };
    auto solver = [&](CLI::App* sub) {
        sub->add_option("--radius-max", o.radius_max, "Largest solver neighbourhood radius")->check(CLI::NonNegativeNumber);
        sub->add_flag("--certificate", o.certificate, "Print the decomposition certificate");
    };

    auto* verify = app.add_subcommand("verify", "Certify every vertex link as a 3-sphere");
    verify->add_option("input", o.input, "Facet file")->required();
    common(verify);
    reduction(verify);
    verify->add_option("--jobs", o.jobs, "Parallel link reductions")->check(CLI::PositiveNumber);
    verify->add_flag("--reverse-orientation", o.reverse, "Reverse the input orientation");

    auto* reduce = app.add_subcommand("reduce", "Reduce a sphere to the boundary of a simplex");
    reduce->add_option("input", o.input, "Facet file")->required();
    common(reduce);
    reduction(reduce);
    reduce->add_flag("--reverse-orientation", o.reverse, "Reverse the input orientation");

    auto* p1 = app.add_subcommand("p1", "First Pontryagin number of a 4-manifold");
    p1->add_option("input", o.input, "Facet file")->required();
    common(p1);
    reduction(p1);
    solver(p1);
    p1->add_option("--jobs", o.jobs, "Parallel link reductions")->check(CLI::PositiveNumber);
    p1->add_flag("--reverse-orientation", o.reverse, "Reverse the input orientation");
    p1->add_option("--cycle-out", o.cycle_out, "Write the assembled cycle as JSON");

    auto* c0 = app.add_subcommand("c0-cycle", "Evaluate c0 on a cycle file");
    c0->add_option("input", o.input, "Chain JSON")->required();
    common(c0);
    solver(c0);

    auto* self = app.add_subcommand("selfcheck", "Run the built-in property suites");
    common(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) return run_verify(o);
        if (*reduce) return run_reduce(o);
        if (*p1) return run_p1(o);
        if (*c0) return run_c0(o);
        return run_selfcheck(o);
    } catch (const Error& e) {
        print({{"error", error_kind_name(e.kind())}, {"message", e.what()}});
        return 1;
    } catch (const std::exception& e) {
        print({{"error", "Internal"}, {"message", e.what()}});
        return 1;
    }
}
