#include "fairga/config.hpp"

#include <cmath>
#include <string>

namespace fairga {

int FairGaConfig::ramp_additions() const {
    const auto rounded = static_cast<int>(std::lround(r_rampup * s_max));
    return std::max(1, rounded);
}

int FairGaConfig::rampup_iterations() const {
    const int a = ramp_additions();
    return (s_max + a - 1) / a;
}

std::string_view to_string(ConfigError e) {
    switch (e) {
        case ConfigError::CapacityNotPositive: return "CapacityNotPositive";
        case ConfigError::LifetimeNegative: return "LifetimeNegative";
        case ConfigError::IterationCountNegative: return "IterationCountNegative";
        case ConfigError::CrossoverRateOutOfRange: return "CrossoverRateOutOfRange";
        case ConfigError::MutationRateOutOfRange: return "MutationRateOutOfRange";
        case ConfigError::RampRateOutOfRange: return "RampRateOutOfRange";
        case ConfigError::ZeroDisposal: return "ZeroDisposal";
        case ConfigError::DisposalExceedsCapacity: return "DisposalExceedsCapacity";
        case ConfigError::ExitDoesNotFit: return "ExitDoesNotFit";
        case ConfigError::RampExceedsDisposal: return "RampExceedsDisposal";
        case ConfigError::RampDoesNotFit: return "RampDoesNotFit";
    }
    return "UnknownConfigError";
}

namespace {

std::optional<ConfigError> check_common(const FairGaConfig& cfg) {
    if (cfg.s_max < 1) return ConfigError::CapacityNotPositive;
    if (!(cfg.crossover_rate >= 0.0 && cfg.crossover_rate <= 1.0))
        return ConfigError::CrossoverRateOutOfRange;
    if (!(cfg.mutation_rate >= 0.0 && cfg.mutation_rate <= 1.0))
        return ConfigError::MutationRateOutOfRange;
    return std::nullopt;
}

} // namespace

std::optional<ConfigError> validate_config(const FairGaConfig& cfg) {
    if (auto err = check_common(cfg)) return err;
    if (cfg.l_min < 0) return ConfigError::LifetimeNegative;
    if (!(cfg.r_rampup > 0.0 && cfg.r_rampup <= 1.0)) return ConfigError::RampRateOutOfRange;
    if (cfg.s_dispose < 1) return ConfigError::ZeroDisposal;
    if (cfg.s_dispose > cfg.s_max) return ConfigError::DisposalExceedsCapacity;
    if (cfg.n_max <= cfg.l_min) return ConfigError::ExitDoesNotFit;
    if (cfg.ramp_additions() > cfg.s_dispose) return ConfigError::RampExceedsDisposal;
    if (cfg.rampup_iterations() > cfg.n_max - cfg.l_min) return ConfigError::RampDoesNotFit;
    return std::nullopt;
}

std::optional<ConfigError> validate_baseline_config(const FairGaConfig& cfg) {
    if (auto err = check_common(cfg)) return err;
    if (cfg.n_max < 0) return ConfigError::IterationCountNegative;
    return std::nullopt;
}

InvalidConfigError::InvalidConfigError(ConfigError code)
    : Error("invalid config: " + std::string(to_string(code))), code_(code) {}

} // namespace fairga
