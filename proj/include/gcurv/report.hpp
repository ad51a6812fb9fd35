#pragma once

// JSON, CSV and plain-table rendering of pipeline results. Exact values are
// written as "p/q" strings next to a "<key>_float" sibling.

#include <charconv>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcurv/curvature.hpp"
#include "gcurv/game.hpp"
#include "gcurv/graph.hpp"
#include "gcurv/metric.hpp"
#include "gcurv/minimax.hpp"

namespace gcurv::report {

using Json = nlohmann::ordered_json;

inline void put(Json& j, const std::string& key, const Rational& r) {
    j[key] = r.to_string();
    j[key + "_float"] = r.to_double();
}

inline void put(Json& j, const std::string& key, const std::optional<Rational>& r) {
    if (r) {
        put(j, key, *r);
    } else {
        j[key] = nullptr;
        j[key + "_float"] = nullptr;
    }
}

inline void put(Json& j, const std::string& key, const std::vector<Rational>& v) {
    Json exact = Json::array();
    Json approx = Json::array();
    for (const auto& x : v) {
        exact.push_back(x.to_string());
        approx.push_back(x.to_double());
    }
    j[key] = std::move(exact);
    j[key + "_float"] = std::move(approx);
}

struct GraphInfo {
    std::string input;
    std::size_t n = 0;
    std::size_t m = 0;
    unsigned retries = 0;
};

inline Json graph_json(const GraphInfo& g) {
    Json j;
    j["input"] = g.input;
    j["n"] = g.n;
    j["m"] = g.m;
    j["gnp_retries"] = g.retries;
    return j;
}

inline Json distances_json(const DistanceMatrix& d) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < d.order(); ++i) {
        const auto r = d.row(i);
        rows.push_back(Json(std::vector<Distance>(r.begin(), r.end())));
    }
    return rows;
}

inline Json metric_summary_json(const DistanceMatrix& d) {
    const auto ecc = eccentricities(d);
    Json j;
    j["row_sums"] = row_sums(d);
    j["eccentricities"] = ecc.ecc;
    j["radius"] = ecc.radius;
    j["diameter"] = ecc.diameter;
    return j;
}

inline Json curvature_json(const CurvatureSolution& sol) {
    Json j;
    j["mode"] = "exact";
    j["status"] = to_string(sol.status);
    j["nullity"] = sol.nullity;
    if (sol.status == SolutionStatus::Underdetermined) {
        j["representative"] = to_string(sol.representative);
    } else {
        j["representative"] = nullptr;
    }
    if (sol.has_solution()) {
        put(j, "w", sol.w);
    } else {
        j["w"] = nullptr;
        j["w_float"] = nullptr;
    }
    put(j, "l1_norm", sol.l1_norm);
    put(j, "bound_K", sol.bound_K);
    put(j, "min_entry", sol.min_entry);
    j["nonneg"] = sol.nonneg;
    j["warnings"] = sol.warnings();
    return j;
}

inline Json float_curvature_json(const FloatSolution& sol) {
    Json j;
    j["mode"] = "float";
    j["status"] = sol.numerically_singular ? "numerically_singular" : "solved";
    if (sol.numerically_singular) {
        j["singular_column"] = sol.singular_column;
        j["w_float"] = nullptr;
        j["l1_norm_float"] = nullptr;
        j["bound_K_float"] = nullptr;
        j["min_entry_float"] = nullptr;
        j["nonneg"] = nullptr;
        j["residual_inf"] = nullptr;
        j["condition_hint"] = nullptr;
        j["warnings"] = {"pivot below 1e-12 * n; rerun with --exact to classify the system"};
        return j;
    }
    double l1 = 0.0;
    double lo = sol.w.front();
    for (double x : sol.w) {
        l1 += std::abs(x);
        lo = std::min(lo, x);
    }
    j["w_float"] = sol.w;
    j["l1_norm_float"] = l1;
    j["bound_K_float"] = static_cast<double>(sol.w.size()) / l1;
    j["min_entry_float"] = lo;
    j["nonneg"] = lo >= 0.0;
    j["residual_inf"] = sol.residual_inf;
    j["condition_hint"] = sol.condition_hint;
    j["warnings"] = Json::array();
    return j;
}

inline Json measure_json(const LabeledMeasure& m) {
    Json j;
    j["label"] = m.label;
    put(j, "p", m.measure.values());
    return j;
}

inline Json verification_json(const VerificationReport& r,
                              const std::optional<LabeledMeasure>& witness,
                              const DistanceMatrix& d) {
    Json j;
    put(j, "K", r.K);
    j["nonneg"] = r.nonneg;
    Json records = Json::array();
    for (const auto& rec : r.records) {
        Json m;
        m["label"] = rec.label;
        put(m, "A", rec.A);
        put(m, "B", rec.B);
        m["argmin"] = rec.argmin;
        m["argmax"] = rec.argmax;
        m["identity"] = rec.identity.to_string();
        m["identity_holds"] = rec.identity_holds;
        m["lower_holds"] = rec.lower_holds;
        m["upper_holds"] = rec.upper_holds;
        m["lower_equality"] = rec.lower_equality;
        m["upper_equality"] = rec.upper_equality;
        records.push_back(std::move(m));
    }
    j["measures"] = std::move(records);
    Json summary;
    summary["measures_checked"] = r.records.size();
    summary["lower_failures"] = r.lower_failures;
    summary["upper_failures"] = r.upper_failures;
    summary["identity_failures"] = r.identity_failures;
    summary["nonneg"] = r.nonneg;
    j["summary"] = std::move(summary);
    if (witness) {
        Json w = measure_json(*witness);
        put(w, "A", transport_vector(d, witness->measure).A);
        j["lower_violation_witness"] = std::move(w);
    } else {
        j["lower_violation_witness"] = nullptr;
    }
    j["findings"] = r.findings;
    j["hard_errors"] = r.hard_errors;
    return j;
}

inline Json game_json(const GameSolution& g, const std::optional<CurvatureComparison>& cmp) {
    Json j;
    put(j, "value", g.value);
    put(j, "maximin_strategy", g.maximin_strategy.values());
    put(j, "minimax_strategy", g.minimax_strategy.values());
    Json cert;
    cert["maximin_residue"] = g.maximin_residue.to_string();
    cert["minimax_residue"] = g.minimax_residue.to_string();
    j["certificate"] = std::move(cert);
    j["pivots"] = g.pivots;
    if (cmp) {
        Json c;
        put(c, "value", cmp->value);
        put(c, "K", cmp->K);
        c["equal"] = cmp->equal;
        c["relation"] = cmp->equal ? "value_equals_K" : "value_exceeds_K";
        j["comparison"] = std::move(c);
    } else {
        j["comparison"] = nullptr;
    }
    return j;
}

// Left-aligned columns separated by two spaces.
class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& os) const {
        std::vector<std::size_t> width;
        for (const auto& row : rows_) {
            width.resize(std::max(width.size(), row.size()));
            for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        }
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                line += row[c];
                if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
            }
            os << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

// Shortest representation that round-trips.
inline std::string fmt_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace gcurv::report
