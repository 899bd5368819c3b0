#pragma once

#include <chrono>

#include "mal/approx.hpp"
#include "mal/dcss.hpp"
#include "mal/exact.hpp"
#include "mal/folklore.hpp"

namespace mal {

enum class OptimalityFlag { exact, exact_minus_known_gap, heuristic };

inline const char* to_string(OptimalityFlag f) {
    switch (f) {
        case OptimalityFlag::exact: return "exact";
        case OptimalityFlag::exact_minus_known_gap: return "exact-minus-known-gap";
        case OptimalityFlag::heuristic: return "heuristic";
    }
    return "heuristic";
}

// Uniform result record for every solver run.
struct SolveReport {
    std::string algorithm;
    long long label_count = 0;
    int lifetime = 0;
    int age_budget = 0;
    bool feasible = false;
    OptimalityFlag optimality = OptimalityFlag::heuristic;
    long long wall_time_ms = 0;
};

struct SolveOutcome {
    Labeling labeling;
    SolveReport report;
};

inline std::vector<std::string> solver_names() {
    return {"trivial",     "folklore-2r", "folklore-2r1",  "large-age",
            "three-half",  "five-thirds", "via-dcss:tree", "via-dcss:plus2",
            "via-dcss:exact", "exact"};
}

inline int required_age(const std::string& algo, const Metrics& m) {
    if (algo == "trivial" || algo == "exact" || algo.rfind("via-dcss:", 0) == 0) return m.diameter;
    if (algo == "folklore-2r") return 2 * m.radius;
    if (algo == "folklore-2r1") return 2 * m.radius + 1;
    if (algo == "large-age") return 2 * m.diameter + 2;
    if (algo == "three-half") return (3 * m.diameter + 1) / 2;
    if (algo == "five-thirds") return (5 * m.diameter + 2) / 3;
    throw ParseError("unknown algorithm: " + algo);
}

// Runs one solver and re-verifies its output at the given age budget before
// reporting it feasible. A verification failure is a bug, not an input error.
inline SolveOutcome run_solver(const Graph& g, int age, const std::string& algo,
                               const ExactBudget& budget = {}) {
    if (g.num_vertices() == 0) throw std::invalid_argument("run_solver: empty graph");
    if (!is_connected(g)) throw InfeasibleError("run_solver: graph is not connected");
    const Metrics m = metrics(g);
    if (age < m.diameter) throw InfeasibleError("run_solver: age below the diameter");
    if (age < required_age(algo, m))
        throw InfeasibleError("run_solver: age below the requirement of " + algo);

    SolveOutcome out;
    out.report.algorithm = algo;
    out.report.age_budget = age;
    out.report.optimality = OptimalityFlag::heuristic;
    const auto start = std::chrono::steady_clock::now();
    if (algo == "trivial") {
        out.labeling = label_trivial(g);
    } else if (algo == "folklore-2r") {
        out.labeling = label_2r(g);
    } else if (algo == "folklore-2r1") {
        out.labeling = label_2r_plus_1(g);
    } else if (algo == "large-age") {
        auto r = label_optimal_large_age(g, age);
        out.labeling = std::move(r.labeling);
        out.report.optimality =
            r.known_gap ? OptimalityFlag::exact_minus_known_gap : OptimalityFlag::exact;
    } else if (algo == "three-half") {
        out.labeling = label_3half(g);
    } else if (algo == "five-thirds") {
        out.labeling = label_5thirds(g);
    } else if (algo == "via-dcss:tree") {
        out.labeling = solve_mal_via_dcss(g, age, tree_baseline_solver());
    } else if (algo == "via-dcss:plus2") {
        out.labeling = solve_mal_via_dcss(g, age, plus2_solver());
    } else if (algo == "via-dcss:exact") {
        out.labeling = solve_mal_via_dcss(g, age, exact_dcss_solver(budget));
    } else if (algo == "exact") {
        out.labeling = exact_mal(g, age, budget);
        out.report.optimality = OptimalityFlag::exact;
    } else {
        throw ParseError("unknown algorithm: " + algo);
    }
    const auto stop = std::chrono::steady_clock::now();
    out.report.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();

    TemporalGraph tg(g, out.labeling);
    if (!is_temporally_connected(tg, age))
        throw std::logic_error("run_solver: " + algo + " produced an infeasible labeling");
    out.report.feasible = true;
    out.report.label_count = count_labels(tg);
    out.report.lifetime = lifetime(tg);
    return out;
}

}  // namespace mal
