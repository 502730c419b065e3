#pragma once

#include <cstdint>

#include "fairga/config.hpp"
#include "fairga/objective.hpp"
#include "fairga/operators.hpp"
#include "fairga/trace.hpp"

namespace fairga {

/// Runs the lifetime-guaranteed GA and returns its complete trace.
///
/// The run has three stages, one trace row per iteration 1..n_max:
///  - ramp-up: age everyone, seed ramp_additions() new members (the final
///    batch is truncated so the population lands exactly on s_max), then
///    replace up to s_dispose discard-eligible members with offspring; ends
///    the first iteration the population is full.
///  - core: age, then replace up to s_dispose eligible members; size stays
///    pinned at s_max; ends at iteration n_max - l_min.
///  - exit: aging only. No evaluations, creations, or discards, so every
///    member alive at the start of the exit stage survives to run end.
///
/// Discard eligibility is age >= l_min, so no chromosome is ever disposed
/// of before living l_min iterations; an internal guard enforces this.
/// Throws InvalidConfigError before any iteration if the config is invalid.
RunTrace run_fairga(const FairGaConfig& cfg, const Objective& obj);
RunTrace run_fairga(const FairGaConfig& cfg, const Objective& obj, const OperatorParams& params);

/// Conventional generational GA used as the comparison baseline: the
/// population starts at full size and each iteration replaces the whole
/// generation except the elitism_count best. l_min, s_dispose and r_rampup
/// are ignored; n_max == 0 yields an empty trace. Every row is tagged Core.
RunTrace run_baseline_ga(const FairGaConfig& cfg, const Objective& obj);
RunTrace run_baseline_ga(const FairGaConfig& cfg, const Objective& obj,
                         const OperatorParams& params);

/// Closed-form whole-population cost of a run with the given schedule:
/// the sum of per-iteration population sizes over ramp-up (size grows by
/// ramp_additions() per iteration, capped at s_max) plus s_max per core
/// iteration; exit iterations are free. Matches the final cum_au of the
/// trace the engines produce for the same schedule exactly.
std::uint64_t expected_au(const StageSchedule& schedule, const FairGaConfig& cfg);

} // namespace fairga
