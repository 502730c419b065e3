#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "fairga/config.hpp"
#include "fairga/engine.hpp"
#include "fairga/objective.hpp"
#include "fairga/random.hpp"
#include "fairga/trace.hpp"

using namespace fairga;

namespace {

FairGaConfig slow_ramp_config() {
    FairGaConfig cfg;
    cfg.s_max = 50;
    cfg.r_rampup = 0.02; // one seed per iteration
    cfg.l_min = 10;
    cfg.s_dispose = 25;
    cfg.n_max = 100;
    cfg.rng_seed = 5;
    return cfg;
}

void check_stage_tags(const RunTrace& trace) {
    for (const auto& row : trace.rows) {
        Stage expected = Stage::Exit;
        if (row.iteration <= trace.schedule.rampup_end) expected = Stage::Rampup;
        else if (row.iteration <= trace.schedule.core_end) expected = Stage::Core;
        CHECK(row.stage == expected);
    }
}

} // namespace

TEST_CASE("one-seed-per-iteration schedule: fill at 50, wait stage after 90") {
    const FairGaConfig cfg = slow_ramp_config();
    const RunTrace trace = run_fairga(cfg, *Objective::by_name("schwefel"));

    CHECK(trace.schedule == StageSchedule{50, 90, 100});
    REQUIRE(trace.rows.size() == 100);
    for (int t = 1; t <= 100; ++t) {
        const auto& row = trace.rows[static_cast<std::size_t>(t - 1)];
        CHECK(row.iteration == t);
        CHECK(row.pop_size == std::min(t, 50));
    }
    check_stage_tags(trace);
    CHECK(fairness_violations(trace, cfg.l_min).empty());
}

TEST_CASE("whole-population cost accounting: triangle plus plateau, free exit") {
    const FairGaConfig cfg = slow_ramp_config();
    const RunTrace trace = run_fairga(cfg, *Objective::by_name("schwefel"));

    // 1 + 2 + ... + 50 while filling, then 50 per core iteration, 0 after
    CHECK(trace.rows.back().cum_au == 1275 + 40 * 50);
    CHECK(expected_au(trace.schedule, cfg) == 3275);

    std::uint64_t acc = 0;
    for (const auto& row : trace.rows) {
        const std::uint64_t charge =
            row.iteration <= trace.schedule.core_end ? static_cast<std::uint64_t>(row.pop_size)
                                                     : 0;
        acc += charge;
        CHECK(row.cum_au == acc);
    }
}

TEST_CASE("a truncated final batch still lands exactly on capacity") {
    FairGaConfig cfg;
    cfg.s_max = 50;
    cfg.r_rampup = 0.15; // 7.5 rounds to 8 seeds per iteration
    cfg.l_min = 5;
    cfg.s_dispose = 10;
    cfg.n_max = 60;
    cfg.rng_seed = 1;
    REQUIRE(cfg.ramp_additions() == 8);

    const RunTrace trace = run_fairga(cfg, *Objective::by_name("berlich"));
    CHECK(trace.schedule == StageSchedule{7, 55, 60});
    const int expected_sizes[] = {8, 16, 24, 32, 40, 48, 50};
    for (int t = 1; t <= 7; ++t)
        CHECK(trace.rows[static_cast<std::size_t>(t - 1)].pop_size == expected_sizes[t - 1]);
    const std::uint64_t ramp_au = 8 + 16 + 24 + 32 + 40 + 48 + 50;
    CHECK(trace.rows.back().cum_au == ramp_au + 48 * 50);
    CHECK(expected_au(trace.schedule, cfg) == trace.rows.back().cum_au);
    check_stage_tags(trace);
}

TEST_CASE("population size never exceeds capacity and the ramp never shrinks") {
    const RunTrace trace = run_fairga(slow_ramp_config(), *Objective::by_name("schwefel"));
    int prev = 0;
    for (const auto& row : trace.rows) {
        CHECK(row.pop_size <= 50);
        if (row.stage == Stage::Rampup) {
            CHECK(row.pop_size >= prev);
            prev = row.pop_size;
        } else {
            CHECK(row.pop_size == 50);
        }
    }
}

TEST_CASE("the final stage is pure waiting") {
    const FairGaConfig cfg = slow_ramp_config();
    const RunTrace trace = run_fairga(cfg, *Objective::by_name("schwefel"));

    const auto end_core = static_cast<std::size_t>(trace.schedule.core_end - 1);
    for (std::size_t r = end_core + 1; r < trace.rows.size(); ++r) {
        CHECK(trace.rows[r].cum_au == trace.rows[end_core].cum_au); // no further charges
        CHECK(trace.rows[r].best_fitness == trace.rows[end_core].best_fitness);
        CHECK(trace.rows[r].mean_fitness == trace.rows[end_core].mean_fitness);
    }
    for (const auto& entry : trace.ledger) {
        CHECK(entry.created_at <= trace.schedule.core_end); // no late creations
        if (entry.discarded_at)
            CHECK(*entry.discarded_at <= trace.schedule.core_end); // no late discards
    }
}

TEST_CASE("ledger bookkeeping: dense ids, one evaluation per chromosome") {
    const RunTrace trace = run_fairga(slow_ramp_config(), *Objective::by_name("schwefel"));
    for (std::size_t i = 0; i < trace.ledger.size(); ++i)
        CHECK(trace.ledger[i].id == i);
    CHECK(trace.evaluations == trace.ledger.size());
}

TEST_CASE("identical configs replay identical traces") {
    const FairGaConfig cfg = slow_ramp_config();
    const Objective obj = *Objective::by_name("schwefel");
    CHECK(run_fairga(cfg, obj) == run_fairga(cfg, obj));

    FairGaConfig other = cfg;
    other.rng_seed = 6;
    CHECK(run_fairga(other, obj) != run_fairga(cfg, obj));
}

TEST_CASE("lifetime guarantee holds across a spread of configurations") {
    const Objective obj = *Objective::by_name("berlich");
    RandomSource rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        FairGaConfig cfg;
        cfg.s_max = 5 + static_cast<int>(rng.index(20));
        cfg.l_min = static_cast<int>(rng.index(6));
        cfg.s_dispose = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(cfg.s_max)));
        const int additions = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(cfg.s_dispose)));
        cfg.r_rampup = static_cast<double>(additions) / cfg.s_max;
        cfg.n_max = cfg.l_min + cfg.rampup_iterations() + 5 + static_cast<int>(rng.index(20));
        cfg.rng_seed = 1000 + static_cast<std::uint64_t>(trial);
        REQUIRE(validate_config(cfg) == std::nullopt);

        const RunTrace trace = run_fairga(cfg, obj);
        CHECK(fairness_violations(trace, cfg.l_min).empty());
        check_stage_tags(trace);
        CHECK(expected_au(trace.schedule, cfg) == trace.rows.back().cum_au);
    }
}

TEST_CASE("invalid configs are rejected before anything runs") {
    FairGaConfig cfg;
    cfg.s_dispose = 0;
    const Objective obj = *Objective::by_name("berlich");
    CHECK_THROWS_AS(run_fairga(cfg, obj), InvalidConfigError);
    try {
        run_fairga(cfg, obj);
        FAIL("expected a validation error");
    } catch (const InvalidConfigError& e) {
        CHECK(e.code() == ConfigError::ZeroDisposal);
    }

    FairGaConfig bad_baseline;
    bad_baseline.n_max = -1;
    CHECK_THROWS_AS(run_baseline_ga(bad_baseline, obj), InvalidConfigError);
}

TEST_CASE("reference engine: flat size, every row core, exact total cost") {
    FairGaConfig cfg;
    cfg.rng_seed = 3;
    const RunTrace trace = run_baseline_ga(cfg, *Objective::by_name("schwefel"));

    REQUIRE(trace.rows.size() == 100);
    CHECK(trace.rows.back().cum_au == 5000);
    CHECK(trace.schedule == StageSchedule{0, 100, 100});
    for (const auto& row : trace.rows) {
        CHECK(row.stage == Stage::Core);
        CHECK(row.pop_size == 50);
    }
}

TEST_CASE("reference engine with elitism never loses ground") {
    FairGaConfig cfg;
    cfg.rng_seed = 11;
    const RunTrace trace = run_baseline_ga(cfg, *Objective::by_name("schwefel"));
    double best = trace.rows.front().best_fitness;
    for (const auto& row : trace.rows) {
        CHECK(row.best_fitness <= best);
        best = row.best_fitness;
    }
}

TEST_CASE("reference engine accepts an empty run") {
    FairGaConfig cfg;
    cfg.n_max = 0;
    const RunTrace trace = run_baseline_ga(cfg, *Objective::by_name("berlich"));
    CHECK(trace.rows.empty());
    CHECK(trace.ledger.empty());
    CHECK(trace.evaluations == 0);
}

TEST_CASE("with the lifetime machinery disabled the two engines coincide") {
    FairGaConfig cfg;
    cfg.s_max = 20;
    cfg.l_min = 0;
    cfg.r_rampup = 1.0;
    cfg.s_dispose = 20;
    cfg.n_max = 60;
    const Objective obj = *Objective::by_name("schwefel");

    for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
        cfg.rng_seed = seed;
        const RunTrace fair = run_fairga(cfg, obj);
        const RunTrace base = run_baseline_ga(cfg, obj);
        REQUIRE(fair.rows.size() == base.rows.size());
        for (std::size_t r = 0; r < fair.rows.size(); ++r) {
            CHECK(fair.rows[r].best_fitness == base.rows[r].best_fitness);
            CHECK(fair.rows[r].mean_fitness == base.rows[r].mean_fitness);
            CHECK(fair.rows[r].pop_size == base.rows[r].pop_size);
            CHECK(fair.rows[r].cum_au == base.rows[r].cum_au);
        }
        CHECK(fair.schedule.core_end == base.schedule.core_end);
        CHECK(fair.schedule.run_end == base.schedule.run_end);
    }
}

TEST_CASE("fairness audit helper flags early discards") {
    RunTrace trace;
    trace.ledger.push_back({0, 1, 5});            // lived 4
    trace.ledger.push_back({1, 1, std::nullopt}); // never discarded
    trace.ledger.push_back({2, 3, 5});            // lived 2
    CHECK(fairness_violations(trace, 3) == std::vector<std::uint64_t>{2});
    CHECK(fairness_violations(trace, 0).empty());
    CHECK(fairness_violations(trace, 5) == std::vector<std::uint64_t>{0, 2});
}
