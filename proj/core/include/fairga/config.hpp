#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "fairga/errors.hpp"

namespace fairga {

/// Built-in benchmark objective selector.
enum class ObjectiveId { BerlichNoisyParabola, Schwefel, Custom };

/// All parameters of a run.
///
/// The population refresh ratio (s_dispose / s_max) is never stored; it is
/// always derived through refresh_ratio() so it cannot drift out of sync.
struct FairGaConfig {
    int s_max = 50;         ///< maximum (and core-stage) population size
    int l_min = 2;          ///< minimum lifetime before a member may be discarded
    int s_dispose = 50;     ///< maximum discards per iteration
    double r_rampup = 0.1;  ///< ramp-up seeding rate, fraction of s_max per iteration
    int n_max = 100;        ///< total iterations in the run
    double crossover_rate = 0.8;
    double mutation_rate = 0.1;
    std::uint64_t rng_seed = 0;
    ObjectiveId objective = ObjectiveId::Schwefel;

    /// Refresh ratio rho = s_dispose / s_max.
    double refresh_ratio() const { return static_cast<double>(s_dispose) / s_max; }

    /// Chromosomes seeded per ramp-up iteration: max(1, round(r_rampup * s_max)).
    /// The floor at one guarantees the ramp always makes progress.
    int ramp_additions() const;

    /// Iterations the ramp-up stage needs to fill the population,
    /// ceil(s_max / ramp_additions()); the final step may be partial.
    int rampup_iterations() const;

    bool operator==(const FairGaConfig&) const = default;
};

/// Reasons a config is rejected. Validation is total: every config either
/// passes or yields exactly the first failing check in declaration order.
enum class ConfigError {
    CapacityNotPositive,     ///< s_max < 1
    LifetimeNegative,        ///< l_min < 0
    IterationCountNegative,  ///< n_max < 0 (baseline validation only)
    CrossoverRateOutOfRange, ///< crossover_rate outside [0, 1]
    MutationRateOutOfRange,  ///< mutation_rate outside [0, 1]
    RampRateOutOfRange,      ///< r_rampup outside (0, 1]
    ZeroDisposal,            ///< s_dispose < 1
    DisposalExceedsCapacity, ///< s_dispose > s_max
    ExitDoesNotFit,          ///< n_max <= l_min: no room before the exit stage
    RampExceedsDisposal,     ///< ramp additions per iteration > s_dispose
    RampDoesNotFit,          ///< population cannot fill before the core stage ends
};

std::string_view to_string(ConfigError e);

/// Full validation used by the FairGA engine. Empty optional means valid.
std::optional<ConfigError> validate_config(const FairGaConfig& cfg);

/// Subset used by the baseline GA, which ignores l_min, s_dispose and
/// r_rampup entirely and accepts n_max == 0 as an empty run.
std::optional<ConfigError> validate_baseline_config(const FairGaConfig& cfg);

/// Thrown by the engines when handed a config that fails validation,
/// before any iteration executes.
class InvalidConfigError : public Error {
public:
    explicit InvalidConfigError(ConfigError code);
    ConfigError code() const { return code_; }

private:
    ConfigError code_;
};

} // namespace fairga
