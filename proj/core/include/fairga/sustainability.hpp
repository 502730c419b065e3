#pragma once

#include <optional>
#include <string_view>

#include "fairga/errors.hpp"

namespace fairga {

/// Inputs of the steady-state resource-flow model: a product fleet of
/// prod_vol units, each binding res_r resource, replaced on average every
/// life_0 time units. A recy_r fraction of retired products is recycled and
/// res_rec of their resource is recovered; the rest must be extracted anew.
/// life_r is the factor by which longevity-optimized design stretches the
/// lifetime (>= 1; 1 means no extension).
struct FlowModelParams {
    double res_r = 1.0;
    double prod_vol = 1.0;
    double recy_r = 0.3;
    double res_rec = 0.8;
    double life_0 = 1.0;
    double life_r = 1.5;

    bool operator==(const FlowModelParams&) const = default;
};

enum class FlowParamError {
    ResourceRateNotPositive,    ///< res_r <= 0 or not finite
    ProductVolumeNotPositive,   ///< prod_vol <= 0 or not finite
    RecyclingRateOutOfRange,    ///< recy_r outside [0, 1]
    RecoveryRateOutOfRange,     ///< res_rec outside [0, 1]
    BaselineLifetimeNotPositive,///< life_0 <= 0 or not finite
    LifetimeFactorBelowOne,     ///< life_r < 1 or not finite
};

std::string_view to_string(FlowParamError e);

/// Empty optional when the parameters satisfy every invariant.
std::optional<FlowParamError> validate(const FlowModelParams& p);

/// Virgin resource drawn from reserves per unit time:
/// res_r * prod_vol * (1 - recy_r * res_rec) / life_0, divided by life_r
/// when the lifetime extension applies. Throws InvalidParamsError.
double extraction_rate(const FlowModelParams& p, bool with_lifetime_extension);

/// Recovered resource fed back into production per unit time:
/// res_r * prod_vol * recy_r * res_rec / life_0, divided by life_r when the
/// lifetime extension applies. Throws InvalidParamsError.
double returned_rate(const FlowModelParams& p, bool with_lifetime_extension);

/// Both scenarios side by side. extraction + returned always equals
/// res_r * prod_vol / lifetime, and the baseline-to-extended extraction
/// ratio is life_r, so reduction_factor carries exactly that value.
struct ScenarioReport {
    double extraction_baseline = 0.0;
    double extraction_extended = 0.0;
    double returned_baseline = 0.0;
    double returned_extended = 0.0;
    double reduction_factor = 1.0;

    bool operator==(const ScenarioReport&) const = default;
};

/// Evaluates both scenarios. Throws InvalidParamsError.
ScenarioReport compare_scenarios(const FlowModelParams& p);

} // namespace fairga
