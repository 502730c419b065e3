#include "fairga/engine.hpp"

#include <algorithm>
#include <utility>

#include "fairga/errors.hpp"
#include "fairga/random.hpp"

namespace fairga {

namespace {

struct RunState {
    Population pop;
    RandomSource rng;
    EvalCounter counter;
    IdSequence ids;
    std::vector<LedgerEntry> ledger;
    std::uint64_t cum_au = 0;

    RunState(int capacity, std::uint64_t seed) : pop(capacity), rng(seed) {}
};

void add_member(RunState& st, Chromosome c) {
    st.ledger.push_back({c.id, c.created_at, std::nullopt});
    st.pop.add(std::move(c));
}

void seed_batch(RunState& st, const Objective& obj, int count, int now) {
    for (int i = 0; i < count; ++i)
        add_member(st, seed_chromosome(st.rng, obj, st.counter, now, st.ids));
}

// One replacement pass: pick the discards, breed exactly that many offspring
// from the pre-removal population, then swap them in. Population size is
// unchanged. The baseline GA is this same pass with l_min = 0 and
// s_dispose = population size, which reduces it to generational replacement.
void replacement_step(RunState& st, const Objective& obj, const OperatorParams& params,
                      int l_min, int s_dispose, int now) {
    const auto discards = select_discards(st.pop, l_min, s_dispose, params.elitism_count);
    if (discards.empty()) return;

    // lifetime guard: select_discards must never hand us an underage member
    for (const auto id : discards)
        for (const auto& m : st.pop.members())
            if (m.id == id && m.age < l_min)
                throw InternalInvariantViolation("discard pick younger than the minimum lifetime");

    const auto k = discards.size();
    std::vector<Chromosome> offspring;
    offspring.reserve(k);
    while (offspring.size() < k) {
        const auto [ia, ib] = select_parents(st.pop, st.rng, params);
        auto children = crossover(st.pop[ia], st.pop[ib], st.rng, params);
        for (auto* genes : {&children.first, &children.second}) {
            if (offspring.size() == k) break;
            Chromosome c;
            c.id = st.ids();
            c.genes = mutate(std::move(*genes), st.rng, obj, params);
            c.created_at = now;
            c.age = 0;
            c.fitness = counted_eval(obj, st.counter, c.genes);
            offspring.push_back(std::move(c));
        }
    }

    st.pop.remove_ids(discards);
    for (const auto id : discards) st.ledger[id].discarded_at = now;
    for (auto& c : offspring) add_member(st, std::move(c));
}

void record_row(RunTrace& trace, const RunState& st, int iteration, Stage stage) {
    trace.rows.push_back({iteration, stage, st.pop.size(), st.pop.best_fitness(),
                          st.pop.mean_fitness(), st.cum_au});
}

RunTrace finish(RunState& st, RunTrace trace, StageSchedule schedule) {
    trace.schedule = schedule;
    trace.ledger = std::move(st.ledger);
    trace.evaluations = st.counter.count;
    return trace;
}

} // namespace

RunTrace run_fairga(const FairGaConfig& cfg, const Objective& obj) {
    return run_fairga(cfg, obj, OperatorParams::from_config(cfg));
}

RunTrace run_fairga(const FairGaConfig& cfg, const Objective& obj, const OperatorParams& params) {
    if (const auto err = validate_config(cfg)) throw InvalidConfigError(*err);

    RunState st(cfg.s_max, cfg.rng_seed);
    RunTrace trace;
    trace.rows.reserve(static_cast<std::size_t>(cfg.n_max));

    const int additions = cfg.ramp_additions();
    const int core_end = cfg.n_max - cfg.l_min;

    int t = 1;
    // Ramp-up: grow by `additions` per iteration (the last batch truncated to
    // land exactly on s_max), replacement running in the same iteration.
    // Ends the first iteration the population is full; validation guarantees
    // that happens no later than core_end.
    for (; !st.pop.full(); ++t) {
        st.pop.age_all();
        seed_batch(st, obj, std::min(additions, cfg.s_max - st.pop.size()), t);
        replacement_step(st, obj, params, cfg.l_min, cfg.s_dispose, t);
        st.cum_au += static_cast<std::uint64_t>(st.pop.size());
        record_row(trace, st, t, Stage::Rampup);
    }
    const int rampup_end = t - 1;

    // Core: constant size, replacement only.
    for (; t <= core_end; ++t) {
        st.pop.age_all();
        replacement_step(st, obj, params, cfg.l_min, cfg.s_dispose, t);
        st.cum_au += static_cast<std::uint64_t>(st.pop.size());
        record_row(trace, st, t, Stage::Core);
    }

    // Exit: aging only. Nothing is evaluated, created, or discarded, and no
    // cost accrues.
    for (; t <= cfg.n_max; ++t) {
        st.pop.age_all();
        record_row(trace, st, t, Stage::Exit);
    }

    return finish(st, std::move(trace), {rampup_end, core_end, cfg.n_max});
}

RunTrace run_baseline_ga(const FairGaConfig& cfg, const Objective& obj) {
    return run_baseline_ga(cfg, obj, OperatorParams::from_config(cfg));
}

RunTrace run_baseline_ga(const FairGaConfig& cfg, const Objective& obj,
                         const OperatorParams& params) {
    if (const auto err = validate_baseline_config(cfg)) throw InvalidConfigError(*err);

    RunTrace trace;
    if (cfg.n_max == 0) return trace;

    RunState st(cfg.s_max, cfg.rng_seed);
    trace.rows.reserve(static_cast<std::size_t>(cfg.n_max));

    // Full-size population up front, then one generational replacement per
    // iteration: everyone except the elites is swapped for offspring.
    seed_batch(st, obj, cfg.s_max, 0);
    for (int t = 1; t <= cfg.n_max; ++t) {
        st.pop.age_all();
        replacement_step(st, obj, params, 0, st.pop.size(), t);
        st.cum_au += static_cast<std::uint64_t>(st.pop.size());
        record_row(trace, st, t, Stage::Core);
    }

    return finish(st, std::move(trace), {0, cfg.n_max, cfg.n_max});
}

std::uint64_t expected_au(const StageSchedule& schedule, const FairGaConfig& cfg) {
    const auto additions = static_cast<std::uint64_t>(cfg.ramp_additions());
    const auto s_max = static_cast<std::uint64_t>(cfg.s_max);
    std::uint64_t au = 0;
    for (int t = 1; t <= schedule.rampup_end; ++t)
        au += std::min(static_cast<std::uint64_t>(t) * additions, s_max);
    au += static_cast<std::uint64_t>(schedule.core_end - schedule.rampup_end) * s_max;
    return au;
}

} // namespace fairga
