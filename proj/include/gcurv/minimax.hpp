#pragma once

// Probability measures on the vertex set, transport vectors D P with their
// extremes A and B, the inner-product identity <w, D P> = n, and exact
// verification of A <= K <= B.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gcurv/counter_rng.hpp"
#include "gcurv/curvature.hpp"
#include "gcurv/error.hpp"
#include "gcurv/graph.hpp"
#include "gcurv/metric.hpp"
#include "gcurv/rational.hpp"

namespace gcurv {

class Measure {
public:
    // Throws ErrorKind::Input unless entries are >= 0 and sum to exactly 1.
    explicit Measure(std::vector<Rational> p) : p_(std::move(p)) {
        if (p_.empty()) fail(ErrorKind::Input, "measure on an empty vertex set");
        Rational total;
        for (const auto& x : p_) {
            if (x.sign() < 0) fail(ErrorKind::Input, "measure has a negative entry");
            total += x;
        }
        if (total != Rational(1)) fail(ErrorKind::Input, "measure does not sum to 1");
    }

    std::size_t size() const { return p_.size(); }
    const Rational& operator[](std::size_t i) const { return p_[i]; }
    const std::vector<Rational>& values() const { return p_; }

    friend bool operator==(const Measure&, const Measure&) = default;

private:
    std::vector<Rational> p_;
};

struct LabeledMeasure {
    std::string label;
    Measure measure;
};

inline Measure measure_delta(std::size_t n, Vertex v) {
    if (v >= n) {
        fail(ErrorKind::Input, "delta at vertex " + std::to_string(v) + " outside [0, " +
                                   std::to_string(n) + ")");
    }
    std::vector<Rational> p(n);
    p[v] = 1;
    return Measure(std::move(p));
}

inline Measure measure_uniform_on(std::size_t n, std::span<const Vertex> support) {
    if (support.empty()) fail(ErrorKind::Input, "uniform measure on an empty subset");
    std::vector<Rational> p(n);
    const Rational mass = Rational(1) / Rational(static_cast<std::uint64_t>(support.size()));
    for (Vertex v : support) {
        if (v >= n) fail(ErrorKind::Input, "subset vertex " + std::to_string(v) + " out of range");
        if (!p[v].is_zero()) fail(ErrorKind::Input, "subset lists vertex " + std::to_string(v) + " twice");
        p[v] = mass;
    }
    return Measure(std::move(p));
}

inline Measure measure_uniform(std::size_t n) {
    std::vector<Vertex> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
    return measure_uniform_on(n, all);
}

inline constexpr std::uint64_t kSampleWeightMax = std::uint64_t{1} << 16;

// Sample i draws n weights uniformly from [1, 2^16] with a stream keyed by
// (seed, i) and normalizes them exactly.
inline Measure sample_measure(std::size_t n, std::uint64_t seed, std::uint64_t index) {
    CounterStream stream{seed, index};
    std::vector<std::uint64_t> weights(n);
    std::uint64_t total = 0;
    for (auto& x : weights) {
        x = stream.below(kSampleWeightMax) + 1;
        total += x;
    }
    std::vector<Rational> p(n);
    const mpz_class den(static_cast<unsigned long>(total));
    for (std::size_t i = 0; i < n; ++i) p[i] = Rational(mpz_class(static_cast<unsigned long>(weights[i])), den);
    return Measure(std::move(p));
}

inline std::vector<Measure> sample_measures(std::size_t n, std::size_t count, std::uint64_t seed) {
    std::vector<Measure> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample_measure(n, seed, i));
    return out;
}

inline std::string subset_label(std::span<const Vertex> support) {
    std::string s = "uniform-on:{";
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(support[i]);
    }
    return s + "}";
}

// Fixed battery: every delta, the uniform measure, the uniform measure on
// V \ {v} for each v (n >= 3), then `samples` seeded random measures.
inline std::vector<LabeledMeasure> measure_battery(std::size_t n, std::size_t samples,
                                                   std::uint64_t seed) {
    std::vector<LabeledMeasure> out;
    for (std::size_t v = 0; v < n; ++v) {
        out.push_back({"delta:" + std::to_string(v), measure_delta(n, static_cast<Vertex>(v))});
    }
    out.push_back({"uniform", measure_uniform(n)});
    if (n >= 3) {
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<Vertex> rest;
            for (std::size_t u = 0; u < n; ++u) {
                if (u != v) rest.push_back(static_cast<Vertex>(u));
            }
            out.push_back({subset_label(rest), measure_uniform_on(n, rest)});
        }
    }
    for (std::size_t i = 0; i < samples; ++i) {
        out.push_back({"sample:" + std::to_string(i), sample_measure(n, seed, i)});
    }
    return out;
}

struct TransportBounds {
    std::vector<Rational> dp;  // D P
    Rational A;                // min_u (D P)_u
    Rational B;                // max_u (D P)_u
    std::size_t argmin = 0;    // lowest index attaining A
    std::size_t argmax = 0;    // lowest index attaining B
};

inline TransportBounds transport_vector(const DistanceMatrix& d, const Measure& p) {
    if (p.size() != d.order()) fail(ErrorKind::Input, "measure and distance matrix differ in size");
    TransportBounds t;
    t.dp = multiply(d, p.values());
    t.A = t.dp.front();
    t.B = t.dp.front();
    for (std::size_t i = 1; i < t.dp.size(); ++i) {
        if (t.dp[i] < t.A) {
            t.A = t.dp[i];
            t.argmin = i;
        }
        if (t.dp[i] > t.B) {
            t.B = t.dp[i];
            t.argmax = i;
        }
    }
    return t;
}

inline Rational dot(std::span<const Rational> x, std::span<const Rational> y) {
    if (x.size() != y.size()) fail(ErrorKind::Input, "dimension mismatch in inner product");
    Rational acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero() && !y[i].is_zero()) acc += x[i] * y[i];
    }
    return acc;
}

// <w, D P>; equals n for every solution w of D w = n 1 and every measure P.
inline Rational identity_check(std::span<const Rational> w, const DistanceMatrix& d,
                               const Measure& p) {
    if (w.size() != d.order()) fail(ErrorKind::Input, "w and distance matrix differ in size");
    return dot(w, transport_vector(d, p).dp);
}

// Every link of n = (n 1, P) = (D w, P) = (w, D P), each computed separately.
struct ProofChain {
    Rational n_one_p;
    Rational dw_p;
    Rational w_dp;

    bool holds(std::size_t n) const {
        const Rational target(static_cast<std::uint64_t>(n));
        return n_one_p == target && dw_p == target && w_dp == target;
    }
};

inline ProofChain proof_chain(std::span<const Rational> w, const DistanceMatrix& d,
                              const Measure& p) {
    const std::vector<Rational> n_one(d.order(), Rational(static_cast<std::uint64_t>(d.order())));
    const auto dw = multiply(d, std::vector<Rational>(w.begin(), w.end()));
    return {dot(n_one, p.values()), dot(dw, p.values()), identity_check(w, d, p)};
}

struct MeasureRecord {
    std::string label;
    Rational A;
    Rational B;
    std::size_t argmin = 0;
    std::size_t argmax = 0;
    Rational identity;  // <w, D P>
    bool identity_holds = false;
    bool lower_holds = false;  // A <= K
    bool upper_holds = false;  // K <= B
    bool lower_equality = false;
    bool upper_equality = false;
};

struct VerificationReport {
    Rational K;
    bool nonneg = false;
    std::vector<MeasureRecord> records;
    std::size_t lower_failures = 0;
    std::size_t upper_failures = 0;
    std::size_t identity_failures = 0;
    std::vector<std::string> findings;     // permitted (signed-w lower failures)
    std::vector<std::string> hard_errors;  // falsify the implementation

    bool ok() const { return hard_errors.empty(); }
};

// Records are filled in input order regardless of `workers` (0 = hardware).
inline VerificationReport verify_minimax(const DistanceMatrix& d, const CurvatureSolution& sol,
                                         std::span<const LabeledMeasure> measures,
                                         unsigned workers = 1) {
    if (!sol.has_solution()) fail(ErrorKind::Inconsistent, "cannot verify: D w = n 1 has no solution");
    const std::size_t n = d.order();
    VerificationReport report;
    report.K = curvature_bound(sol, n);
    report.nonneg = sol.nonneg;
    report.records.resize(measures.size());

    const Rational target(static_cast<std::uint64_t>(n));
    auto evaluate = [&](std::size_t i) {
        const auto t = transport_vector(d, measures[i].measure);
        MeasureRecord& rec = report.records[i];
        rec.label = measures[i].label;
        rec.identity = dot(sol.w, t.dp);
        rec.identity_holds = rec.identity == target;
        rec.lower_holds = t.A <= report.K;
        rec.upper_holds = report.K <= t.B;
        rec.lower_equality = t.A == report.K;
        rec.upper_equality = t.B == report.K;
        rec.A = t.A;
        rec.B = t.B;
        rec.argmin = t.argmin;
        rec.argmax = t.argmax;
    };

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers <= 1 || measures.size() < 2) {
        for (std::size_t i = 0; i < measures.size(); ++i) evaluate(i);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < measures.size(); i += workers) evaluate(i);
            });
        }
    }

    for (const auto& rec : report.records) {
        if (!rec.identity_holds) {
            ++report.identity_failures;
            report.hard_errors.push_back(rec.label + ": <w, D P> = " + rec.identity.to_string() +
                                         " != n");
        }
        if (!rec.upper_holds) {
            ++report.upper_failures;
            report.hard_errors.push_back(rec.label + ": upper bound fails, K = " +
                                         report.K.to_string() + " > B = " + rec.B.to_string());
        }
        if (!rec.lower_holds) {
            ++report.lower_failures;
            std::string msg = rec.label + ": lower bound fails, A = " + rec.A.to_string() +
                              " > K = " + report.K.to_string();
            if (sol.nonneg) {
                report.hard_errors.push_back(msg + " although w is non-negative");
            } else {
                report.findings.push_back(msg + " (permitted: w has a negative entry)");
            }
        }
    }
    return report;
}

namespace detail {

// Next k-subset of {0..n-1} in lexicographic order; false after the last.
inline bool next_combination(std::vector<Vertex>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

inline constexpr std::size_t kMaxSubsetSize = 12;
inline constexpr std::size_t kMaxSubsetsSearched = std::size_t{1} << 16;

// Looks for a measure with A(P) > K. Order: deltas by index; uniform
// measures on subsets from size min(n, 12) down to 2, lexicographic within
// a size, at most 2^16 subsets; then `budget` seeded samples.
inline std::optional<LabeledMeasure> search_lower_violation(const DistanceMatrix& d,
                                                            const CurvatureSolution& sol,
                                                            std::size_t budget,
                                                            std::uint64_t seed = 0) {
    const std::size_t n = d.order();
    const Rational K = curvature_bound(sol, n);

    auto check = [&](LabeledMeasure m) -> std::optional<LabeledMeasure> {
        if (transport_vector(d, m.measure).A > K) {
            if (sol.nonneg) {
                fail(ErrorKind::Verification, "lower-bound violation " + m.label +
                                                  " found although w is non-negative");
            }
            return m;
        }
        return std::nullopt;
    };

    for (std::size_t v = 0; v < n; ++v) {
        if (auto hit = check({"delta:" + std::to_string(v), measure_delta(n, static_cast<Vertex>(v))})) {
            return hit;
        }
    }

    std::size_t searched = 0;
    for (std::size_t size = std::min(n, kMaxSubsetSize); size >= 2 && searched < kMaxSubsetsSearched;
         --size) {
        std::vector<Vertex> subset(size);
        for (std::size_t i = 0; i < size; ++i) subset[i] = static_cast<Vertex>(i);
        do {
            const std::string label = size == n ? "uniform" : subset_label(subset);
            if (auto hit = check({label, measure_uniform_on(n, subset)})) return hit;
        } while (++searched < kMaxSubsetsSearched && detail::next_combination(subset, n));
    }

    for (std::size_t i = 0; i < budget; ++i) {
        if (auto hit = check({"sample:" + std::to_string(i), sample_measure(n, seed, i)})) return hit;
    }
    return std::nullopt;
}

}  // namespace gcurv
