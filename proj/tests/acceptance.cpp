// Release gate: one check per shipped guarantee, each printed as a single
// [PASS]/[FAIL] line with the measured numbers. Exits nonzero if any fails.
//
// Tolerances are pinned here on purpose — loosening one is a release decision,
// not a test tweak.
#include "fairga/engine.hpp"
#include "fairga/experiment.hpp"
#include "fairga/objective.hpp"
#include "fairga/random.hpp"
#include "fairga/sustainability.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace fairga;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " — " << detail << '\n';
    if (!ok) ++g_failures;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return quantile_sorted(v, 0.5);
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

// 1. Lifetime guarantee: across a broad random sweep of valid settings, no
//    chromosome is ever discarded before living l_min iterations.
void check_lifetime_guarantee() {
    constexpr int kRuns = 1000;
    RandomSource gen(2024);
    const Objective obj = Objective::berlich();
    long long chromosomes_audited = 0;
    int violating_runs = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < kRuns; ++i) {
        FairGaConfig cfg;
        cfg.s_max = 4 + static_cast<int>(gen.index(57));
        cfg.l_min = static_cast<int>(gen.index(21));
        cfg.s_dispose = 1 + static_cast<int>(gen.index(static_cast<std::size_t>(cfg.s_max)));
        const int additions =
            1 + static_cast<int>(gen.index(static_cast<std::size_t>(cfg.s_dispose)));
        cfg.r_rampup = static_cast<double>(additions) / static_cast<double>(cfg.s_max);
        cfg.rng_seed = 9000 + static_cast<std::uint64_t>(i);
        cfg.n_max = cfg.l_min + cfg.rampup_iterations() + 1 + static_cast<int>(gen.index(30));
        if (validate_config(cfg).has_value()) {
            ++violating_runs; // sweep generator produced an invalid setting
            continue;
        }
        const RunTrace trace = run_fairga(cfg, obj);
        chromosomes_audited += static_cast<long long>(trace.ledger.size());
        if (!fairness_violations(trace, cfg.l_min).empty()) ++violating_runs;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    report("minimum-lifetime guarantee", violating_runs == 0,
           std::to_string(kRuns) + " randomized runs, " + std::to_string(chromosomes_audited) +
               " chromosome lifetimes audited, " + std::to_string(violating_runs) +
               " early disposals (" + std::to_string(ms) + " ms)");
}

// 2. With the lifetime machinery disabled (l_min = 0, full refresh each
//    iteration) the fair engine reproduces the conventional engine exactly.
void check_degenerate_equivalence() {
    FairGaConfig cfg;
    cfg.s_max = 20;
    cfg.l_min = 0;
    cfg.r_rampup = 1.0;
    cfg.s_dispose = 20;
    cfg.n_max = 60;
    const Objective obj = Objective::schwefel();
    int mismatched_rows = 0;
    int rows_total = 0;
    for (const int seed : {11, 12, 13}) {
        cfg.rng_seed = static_cast<std::uint64_t>(seed);
        const RunTrace fair = run_fairga(cfg, obj);
        const RunTrace base = run_baseline_ga(cfg, obj);
        rows_total += static_cast<int>(fair.rows.size());
        if (fair.rows.size() != base.rows.size()) {
            ++mismatched_rows;
            continue;
        }
        for (std::size_t r = 0; r < fair.rows.size(); ++r)
            if (fair.rows[r].best_fitness != base.rows[r].best_fitness) ++mismatched_rows;
    }
    report("degenerate settings reproduce the conventional engine", mismatched_rows == 0,
           "3 seeds, " + std::to_string(rows_total) + " iteration rows compared, " +
               std::to_string(mismatched_rows) + " best-fitness mismatches");
}

// 3. Conventional engine at stock settings costs exactly iterations x capacity.
void check_baseline_cost() {
    const FairGaConfig cfg; // stock settings: capacity 50, 100 iterations
    const RunTrace trace = run_baseline_ga(cfg, Objective::schwefel());
    const std::uint64_t au = trace.rows.back().cum_au;
    report("conventional-engine evaluation budget", au == 5000,
           "final cumulative cost " + std::to_string(au) + " a.u., expected 5000 exactly");
}

// 4. Slow-rampup fair run books the documented reduced budget: the ramp plus
//    the free exit phase makes 3275 a.u. instead of the flat 5000.
void check_fair_cost() {
    FairGaConfig cfg;
    cfg.s_max = 50;
    cfg.r_rampup = 0.02;
    cfg.l_min = 10;
    cfg.s_dispose = 25;
    cfg.n_max = 100;
    const RunTrace trace = run_fairga(cfg, Objective::schwefel());
    const std::uint64_t au = trace.rows.back().cum_au;
    const std::uint64_t predicted = expected_au(trace.schedule, cfg);
    const bool ok = au == 3275 && predicted == au && au >= 3000 && au <= 4500;
    report("fair-engine evaluation budget", ok,
           "final cumulative cost " + std::to_string(au) + " a.u., closed-form prediction " +
               std::to_string(predicted) + ", expected 3275 (and within [3000, 4500])");
}

// 5. Optimization quality at shipped defaults: over 20 replicates per engine
//    and objective, median best fitness reaches the documented band, fast.
void check_solution_quality() {
    constexpr int kReplicates = 20;
    constexpr std::uint64_t kSeedBase = 42;
    const auto t0 = std::chrono::steady_clock::now();
    std::map<std::string, double> medians;
    for (const std::string name : {"berlich", "schwefel"}) {
        const Objective obj = *Objective::by_name(name);
        for (const bool fair : {true, false}) {
            FairGaConfig cfg;
            std::vector<double> best;
            for (int i = 0; i < kReplicates; ++i) {
                cfg.rng_seed = kSeedBase + static_cast<std::uint64_t>(i);
                const RunTrace trace = fair ? run_fairga(cfg, obj) : run_baseline_ga(cfg, obj);
                best.push_back(trace.rows.back().best_fitness);
            }
            medians[(fair ? "fair/" : "conventional/") + name] = median(best);
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool quality = medians["fair/berlich"] < 0.01 &&
                         medians["conventional/berlich"] < 0.01 &&
                         medians["fair/schwefel"] <= -400.0 &&
                         medians["conventional/schwefel"] <= -400.0;
    const bool fast = secs < 60.0;
    report("optimization quality at shipped defaults", quality && fast,
           "medians over 20 replicates: fair/berlich " + fmt(medians["fair/berlich"]) +
               " (< 0.01), conventional/berlich " + fmt(medians["conventional/berlich"]) +
               " (< 0.01), fair/schwefel " + fmt(medians["fair/schwefel"]) +
               " (<= -400), conventional/schwefel " + fmt(medians["conventional/schwefel"]) +
               " (<= -400); " + fmt(secs) + " s wall (< 60)");
}

// 6. Objective functions match independent formulas.
void check_objectives() {
    bool ok = true;

    const std::vector<double> zero = {0.0, 0.0};
    const double origin = eval_berlich(zero);
    ok = ok && origin == 0.0;

    RandomSource gen(7);
    int envelope_misses = 0;
    for (int i = 0; i < 100000; ++i) {
        const std::vector<double> x = {gen.uniform(-100.0, 100.0), gen.uniform(-100.0, 100.0)};
        const double s = x[0] * x[0] + x[1] * x[1];
        const double v = eval_berlich(x);
        if (v < s - 1e-9 * s || v > 3.0 * s + 1e-9 * s) ++envelope_misses;
    }
    ok = ok && envelope_misses == 0;

    // independent oracle, written out from the defining formula
    const double m = 420.969;
    const double oracle =
        -0.5 * (m * std::sin(std::sqrt(std::abs(m))) + m * std::sin(std::sqrt(std::abs(m))));
    const std::vector<double> minimum = {m, m};
    const double lib = eval_schwefel(minimum);
    ok = ok && std::abs(lib - oracle) <= 1e-12 && std::abs(lib - (-418.983)) <= 0.01;

    report("objective-function values", ok,
           "noisy parabola at origin = " + fmt(origin) + " (expect 0); envelope misses " +
               std::to_string(envelope_misses) + "/100000; sine-landscape minimum " + fmt(lib) +
               " vs oracle " + fmt(oracle) + " (|diff| <= 1e-12, within 0.01 of -418.983)");
}

// 7. Resource-flow model reproduces the documented circular-economy numbers.
void check_resource_flows() {
    const FlowModelParams params; // stock scenario: 30% recyclable share, 80% recovery
    const ScenarioReport rep = compare_scenarios(params);

    char buf[4][16];
    std::snprintf(buf[0], sizeof buf[0], "%.2f", rep.extraction_baseline);
    std::snprintf(buf[1], sizeof buf[1], "%.2f", rep.extraction_extended);
    std::snprintf(buf[2], sizeof buf[2], "%.2f", rep.returned_baseline);
    std::snprintf(buf[3], sizeof buf[3], "%.2f", rep.returned_extended);

    const bool displays = std::string(buf[0]) == "0.76" && std::string(buf[1]) == "0.51" &&
                          std::string(buf[2]) == "0.24" && std::string(buf[3]) == "0.16";
    const bool internals = std::abs(rep.extraction_baseline - 0.76) <= 1e-12 &&
                           std::abs(rep.extraction_extended - 0.76 / 1.5) <= 1e-12 &&
                           std::abs(rep.returned_baseline - 0.24) <= 1e-12 &&
                           std::abs(rep.returned_extended - 0.16) <= 1e-12 &&
                           rep.reduction_factor == 1.5;
    report("resource-flow scenario numbers", displays && internals,
           std::string("extraction ") + buf[0] + " -> " + buf[1] + ", returned " + buf[2] +
               " -> " + buf[3] + ", reduction factor " + fmt(rep.reduction_factor) +
               " (expect 0.76 -> 0.51, 0.24 -> 0.16, 1.5)");
}

// 8. The experiment driver is reproducible: the same request issued twice
//    yields byte-identical artifacts.
void check_reproducibility() {
    const fs::path root = fs::temp_directory_path() / "fairga-acceptance";
    fs::remove_all(root);
    ExperimentSpec spec;
    spec.algorithm = Algorithm::Both;
    spec.objective = "schwefel";
    spec.replicates = 2;
    spec.seed_base = 42;

    std::ostringstream diag;
    auto run_into = [&](const fs::path& dir) {
        spec.output_dir = dir;
        return cli::run(spec, diag);
    };
    const int rc1 = run_into(root / "a");
    const int rc2 = run_into(root / "b");

    std::vector<std::string> names;
    int differing = 0;
    if (rc1 == cli::kExitOk && rc2 == cli::kExitOk) {
        for (const auto& entry : fs::directory_iterator(root / "a")) {
            names.push_back(entry.path().filename().string());
            std::ifstream a(entry.path(), std::ios::binary);
            std::ifstream b(root / "b" / entry.path().filename(), std::ios::binary);
            std::ostringstream sa, sb;
            sa << a.rdbuf();
            sb << b.rdbuf();
            if (sa.str() != sb.str()) ++differing;
        }
    }
    const bool ok =
        rc1 == cli::kExitOk && rc2 == cli::kExitOk && names.size() == 6 && differing == 0;
    report("run-to-run reproducibility", ok,
           "two identical requests produced " + std::to_string(names.size()) +
               " files each, " + std::to_string(differing) + " differing");
    fs::remove_all(root);
}

// 9. Settings whose ramp batch exceeds the disposal allowance are rejected up
//    front, by both the validator and the engine.
void check_ramp_rejection() {
    constexpr int kCases = 200;
    RandomSource gen(515);
    const Objective obj = Objective::berlich();
    int wrong_validation = 0;
    int wrong_engine = 0;
    for (int i = 0; i < kCases; ++i) {
        FairGaConfig cfg;
        cfg.s_max = 4 + static_cast<int>(gen.index(57));
        const int additions =
            2 + static_cast<int>(gen.index(static_cast<std::size_t>(cfg.s_max - 1)));
        cfg.r_rampup = static_cast<double>(additions) / static_cast<double>(cfg.s_max);
        cfg.s_dispose = 1 + static_cast<int>(gen.index(static_cast<std::size_t>(additions - 1)));
        cfg.l_min = static_cast<int>(gen.index(4));
        cfg.n_max = cfg.l_min + 50;
        cfg.rng_seed = static_cast<std::uint64_t>(i);

        const auto verdict = validate_config(cfg);
        if (!verdict.has_value() || *verdict != ConfigError::RampExceedsDisposal)
            ++wrong_validation;
        try {
            (void)run_fairga(cfg, obj);
            ++wrong_engine; // must not run at all
        } catch (const InvalidConfigError& e) {
            if (e.code() != ConfigError::RampExceedsDisposal) ++wrong_engine;
        }
    }
    report("oversized ramp batches are rejected", wrong_validation == 0 && wrong_engine == 0,
           std::to_string(kCases) + " randomized rejection cases; validator misses " +
               std::to_string(wrong_validation) + ", engine misses " +
               std::to_string(wrong_engine));
}

} // namespace

int main() {
    check_lifetime_guarantee();
    check_degenerate_equivalence();
    check_baseline_cost();
    check_fair_cost();
    check_solution_quality();
    check_objectives();
    check_resource_flows();
    check_reproducibility();
    check_ramp_rejection();

    if (g_failures == 0) {
        std::cout << "acceptance: all 9 checks passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " check(s) FAILED\n";
    return 1;
}
