#pragma once

// Command pipeline behind the `gcurv` executable. `run` never throws for
// user-facing failures; it writes the report to `out`, diagnostics to `err`
// and returns the exit code:
//   0 ok, 2 input error, 3 disconnected graph, 4 inconsistent system,
//   5 hard verification failure.

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gcurv/curvature.hpp"
#include "gcurv/error.hpp"
#include "gcurv/game.hpp"
#include "gcurv/generators.hpp"
#include "gcurv/graph.hpp"
#include "gcurv/metric.hpp"
#include "gcurv/minimax.hpp"
#include "gcurv/report.hpp"

namespace gcurv::cli {

enum class Command { Dist, Curvature, Verify, Game, Gen, Report };
enum class Format { Json, Csv, Table };
enum class Mode { Exact, Float };

struct RunConfig {
    Command command = Command::Report;
    std::string input;  // edge-list path or generator spec
    Format format = Format::Json;
    std::uint64_t seed = 0;
    std::size_t samples = 100;
    Mode mode = Mode::Exact;
    unsigned workers = 1;  // 0 = hardware concurrency
};

inline const char* to_string(Command c) {
    switch (c) {
        case Command::Dist: return "dist";
        case Command::Curvature: return "curvature";
        case Command::Verify: return "verify";
        case Command::Game: return "game";
        case Command::Gen: return "gen";
        case Command::Report: return "report";
    }
    return "?";
}

namespace detail {

using report::Json;

struct LoadedGraph {
    Graph graph;
    report::GraphInfo info;
};

inline LoadedGraph load(const RunConfig& cfg) {
    if (cfg.input.empty()) fail(ErrorKind::Input, "no --input given");
    if (GeneratorSpec::looks_like_spec(cfg.input)) {
        auto gen = generate(cfg.input, cfg.seed);
        report::GraphInfo info{cfg.input, gen.graph.order(), gen.graph.size(), gen.retries};
        return {std::move(gen.graph), info};
    }
    std::ifstream in(cfg.input);
    if (!in) fail(ErrorKind::Input, "cannot open graph file \"" + cfg.input + "\"");
    Graph g = parse_edge_list(in);
    report::GraphInfo info{cfg.input, g.order(), g.size(), 0};
    return {std::move(g), info};
}

inline DistanceMatrix distances(const LoadedGraph& lg, const RunConfig& cfg) {
    const auto v = validate(lg.graph);
    if (!v.connected) {
        std::string msg = "graph is disconnected";
        if (!v.issues.empty()) msg += ": " + v.issues.front();
        fail(ErrorKind::Disconnected, msg);
    }
    return apsp(lg.graph, cfg.workers);
}

inline Json header(const RunConfig& cfg, const LoadedGraph& lg) {
    Json j;
    j["command"] = to_string(cfg.command);
    j["graph"] = report::graph_json(lg.info);
    return j;
}

inline void require_solution(const CurvatureSolution& sol) {
    if (!sol.has_solution()) fail(ErrorKind::Inconsistent, "D w = n 1 has no solution for this graph");
}

inline const char* csv_bool(bool b) { return b ? "true" : "false"; }

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline int run_dist(const RunConfig& cfg, std::ostream& out) {
    const auto lg = load(cfg);
    const auto d = distances(lg, cfg);
    const std::size_t n = d.order();
    switch (cfg.format) {
        case Format::Json: print_json(out, report::distances_json(d)); break;
        case Format::Csv:
        case Format::Table: {
            const char sep = cfg.format == Format::Csv ? ',' : ' ';
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (j) out << sep;
                    out << d(i, j);
                }
                out << '\n';
            }
            break;
        }
    }
    return 0;
}

inline int run_gen(const RunConfig& cfg, std::ostream& out) {
    const auto lg = load(cfg);
    switch (cfg.format) {
        case Format::Json: {
            Json j = header(cfg, lg);
            Json edges = Json::array();
            for (const auto& [u, v] : lg.graph.edges()) edges.push_back({u, v});
            j["edges"] = std::move(edges);
            print_json(out, j);
            break;
        }
        case Format::Csv:
            out << "u,v\n";
            for (const auto& [u, v] : lg.graph.edges()) out << u << ',' << v << '\n';
            break;
        case Format::Table: out << serialize(lg.graph); break;
    }
    return 0;
}

inline int run_curvature(const RunConfig& cfg, std::ostream& out) {
    const auto lg = load(cfg);
    const auto d = distances(lg, cfg);
    if (cfg.mode == Mode::Float) {
        const auto sol = solve_curvature_float(d);
        switch (cfg.format) {
            case Format::Json: {
                Json j = header(cfg, lg);
                j["curvature"] = report::float_curvature_json(sol);
                print_json(out, j);
                break;
            }
            case Format::Csv:
                out << "vertex,w_float\n";
                for (std::size_t i = 0; i < sol.w.size(); ++i) {
                    out << i << ',' << report::fmt_double(sol.w[i]) << '\n';
                }
                break;
            case Format::Table: {
                if (sol.numerically_singular) {
                    out << "numerically singular at column " << sol.singular_column << '\n';
                    break;
                }
                report::Table t({"vertex", "w_float"});
                for (std::size_t i = 0; i < sol.w.size(); ++i) {
                    t.add({std::to_string(i), report::fmt_double(sol.w[i])});
                }
                t.print(out);
                out << "residual_inf  " << report::fmt_double(sol.residual_inf) << '\n';
                out << "condition_hint  " << report::fmt_double(sol.condition_hint) << '\n';
                break;
            }
        }
        if (sol.numerically_singular) {
            fail(ErrorKind::Inconsistent, "float solve hit a numerically singular pivot at column " +
                                              std::to_string(sol.singular_column));
        }
        return 0;
    }

    const auto sol = solve_curvature(d);
    switch (cfg.format) {
        case Format::Json: {
            Json j = header(cfg, lg);
            j["curvature"] = report::curvature_json(sol);
            print_json(out, j);
            break;
        }
        case Format::Csv:
            out << "vertex,w,w_float\n";
            for (std::size_t i = 0; i < sol.w.size(); ++i) {
                out << i << ',' << sol.w[i] << ',' << report::fmt_double(sol.w[i].to_double()) << '\n';
            }
            break;
        case Format::Table: {
            out << "status  " << to_string(sol.status) << '\n';
            if (sol.has_solution()) {
                report::Table t({"vertex", "w", "w_float"});
                for (std::size_t i = 0; i < sol.w.size(); ++i) {
                    t.add({std::to_string(i), sol.w[i].to_string(),
                           report::fmt_double(sol.w[i].to_double())});
                }
                t.print(out);
                out << "l1_norm  " << *sol.l1_norm << '\n';
                out << "K  " << *sol.bound_K << "  (" << report::fmt_double(sol.bound_K->to_double())
                    << ")\n";
                out << "nonneg  " << report::yes_no(sol.nonneg) << '\n';
            }
            for (const auto& w : sol.warnings()) out << "warning: " << w << '\n';
            break;
        }
    }
    require_solution(sol);
    return 0;
}

struct Verification {
    VerificationReport report;
    std::optional<LabeledMeasure> witness;
};

inline Verification verify(const DistanceMatrix& d, const CurvatureSolution& sol,
                           const RunConfig& cfg) {
    const auto battery = measure_battery(d.order(), cfg.samples, cfg.seed);
    Verification v{verify_minimax(d, sol, battery, cfg.workers), std::nullopt};
    // A non-negative w admits no witness, so the search only runs for signed w.
    if (!sol.nonneg) v.witness = search_lower_violation(d, sol, cfg.samples, cfg.seed);
    return v;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
    const auto lg = load(cfg);
    const auto d = distances(lg, cfg);
    const auto sol = solve_curvature(d);
    require_solution(sol);
    const auto v = verify(d, sol, cfg);
    const auto& r = v.report;

    switch (cfg.format) {
        case Format::Json: {
            Json j = header(cfg, lg);
            j["seed"] = cfg.seed;
            j["samples"] = cfg.samples;
            j["verification"] = report::verification_json(r, v.witness, d);
            j["warnings"] = sol.warnings();
            print_json(out, j);
            break;
        }
        case Format::Csv:
            out << "label,A,B,K,identity,identity_holds,lower_holds,upper_holds\n";
            for (const auto& rec : r.records) {
                out << rec.label << ',' << rec.A << ',' << rec.B << ',' << r.K << ',' << rec.identity
                    << ',' << csv_bool(rec.identity_holds) << ',' << csv_bool(rec.lower_holds) << ','
                    << csv_bool(rec.upper_holds) << '\n';
            }
            break;
        case Format::Table: {
            report::Table t({"measure", "A", "B", "A<=K", "K<=B", "<w,DP>=n"});
            for (const auto& rec : r.records) {
                t.add({rec.label, rec.A.to_string(), rec.B.to_string(), report::yes_no(rec.lower_holds),
                       report::yes_no(rec.upper_holds), report::yes_no(rec.identity_holds)});
            }
            t.print(out);
            out << "K  " << r.K << "\nnonneg  " << report::yes_no(r.nonneg) << '\n';
            out << "measures " << r.records.size() << ", lower failures " << r.lower_failures
                << ", upper failures " << r.upper_failures << ", identity failures "
                << r.identity_failures << '\n';
            if (v.witness) out << "lower-bound witness  " << v.witness->label << '\n';
            for (const auto& f : r.findings) out << "finding: " << f << '\n';
            for (const auto& w : sol.warnings()) out << "warning: " << w << '\n';
            for (const auto& e : r.hard_errors) out << "ERROR: " << e << '\n';
            break;
        }
    }
    if (!r.ok()) fail(ErrorKind::Verification, r.hard_errors.front());
    return 0;
}

inline int run_game(const RunConfig& cfg, std::ostream& out) {
    const auto lg = load(cfg);
    const auto d = distances(lg, cfg);
    const auto game = game_value(d);
    const auto sol = solve_curvature(d);
    std::optional<CurvatureComparison> cmp;
    if (sol.has_solution()) cmp = game_vs_curvature(game, sol, d.order());

    std::vector<std::string> warnings = sol.warnings();
    switch (cfg.format) {
        case Format::Json: {
            Json j = header(cfg, lg);
            j["game"] = report::game_json(game, cmp);
            j["warnings"] = warnings;
            print_json(out, j);
            break;
        }
        case Format::Csv:
            out << "vertex,maximin,maximin_float,minimax,minimax_float\n";
            for (std::size_t i = 0; i < d.order(); ++i) {
                const auto& p = game.maximin_strategy[i];
                const auto& q = game.minimax_strategy[i];
                out << i << ',' << p << ',' << report::fmt_double(p.to_double()) << ',' << q << ','
                    << report::fmt_double(q.to_double()) << '\n';
            }
            break;
        case Format::Table: {
            report::Table t({"vertex", "maximin", "minimax"});
            for (std::size_t i = 0; i < d.order(); ++i) {
                t.add({std::to_string(i), game.maximin_strategy[i].to_string(),
                       game.minimax_strategy[i].to_string()});
            }
            t.print(out);
            out << "value  " << game.value << "  (" << report::fmt_double(game.value.to_double())
                << ")\n";
            if (cmp) {
                out << "K  " << cmp->K << "\nvalue = K  " << report::yes_no(cmp->equal) << '\n';
            }
            for (const auto& w : warnings) out << "warning: " << w << '\n';
            break;
        }
    }
    return 0;
}

inline int run_report(const RunConfig& cfg, std::ostream& out) {
    if (cfg.format == Format::Csv) fail(ErrorKind::Input, "report supports --format json|table");
    const auto lg = load(cfg);
    const auto d = distances(lg, cfg);
    const auto sol = solve_curvature(d);
    require_solution(sol);
    const auto v = verify(d, sol, cfg);
    const auto game = game_value(d);
    const auto cmp = game_vs_curvature(game, sol, d.order());
    const bool ok = v.report.ok();

    if (cfg.format == Format::Json) {
        Json j = header(cfg, lg);
        j["seed"] = cfg.seed;
        j["samples"] = cfg.samples;
        j["metric"] = report::metric_summary_json(d);
        j["curvature"] = report::curvature_json(sol);
        j["verification"] = report::verification_json(v.report, v.witness, d);
        j["game"] = report::game_json(game, cmp);
        j["warnings"] = sol.warnings();
        j["ok"] = ok;
        print_json(out, j);
    } else {
        const auto ecc = eccentricities(d);
        out << "graph  " << lg.info.input << "  (n = " << lg.info.n << ", m = " << lg.info.m << ")\n";
        out << "radius  " << ecc.radius << "\ndiameter  " << ecc.diameter << '\n';
        out << "status  " << to_string(sol.status) << '\n';
        out << "K  " << *sol.bound_K << "  (" << report::fmt_double(sol.bound_K->to_double()) << ")\n";
        out << "min w  " << *sol.min_entry << "\nnonneg  " << report::yes_no(sol.nonneg) << '\n';
        out << "measures checked  " << v.report.records.size() << "\nlower failures  "
            << v.report.lower_failures << "\nupper failures  " << v.report.upper_failures
            << "\nidentity failures  " << v.report.identity_failures << '\n';
        if (v.witness) out << "lower-bound witness  " << v.witness->label << '\n';
        out << "game value  " << game.value << "\nvalue = K  " << report::yes_no(cmp.equal) << '\n';
        for (const auto& w : sol.warnings()) out << "warning: " << w << '\n';
        for (const auto& e : v.report.hard_errors) out << "ERROR: " << e << '\n';
        out << "ok  " << report::yes_no(ok) << '\n';
    }
    if (!ok) fail(ErrorKind::Verification, v.report.hard_errors.front());
    return 0;
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::Dist: return detail::run_dist(cfg, out);
            case Command::Curvature: return detail::run_curvature(cfg, out);
            case Command::Verify: return detail::run_verify(cfg, out);
            case Command::Game: return detail::run_game(cfg, out);
            case Command::Gen: return detail::run_gen(cfg, out);
            case Command::Report: return detail::run_report(cfg, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.exit_code();
    }
    return 0;
}

}  // namespace gcurv::cli
