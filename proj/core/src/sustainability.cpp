#include "fairga/sustainability.hpp"

#include <cmath>
#include <string>

namespace fairga {

std::string_view to_string(FlowParamError e) {
    switch (e) {
        case FlowParamError::ResourceRateNotPositive: return "ResourceRateNotPositive";
        case FlowParamError::ProductVolumeNotPositive: return "ProductVolumeNotPositive";
        case FlowParamError::RecyclingRateOutOfRange: return "RecyclingRateOutOfRange";
        case FlowParamError::RecoveryRateOutOfRange: return "RecoveryRateOutOfRange";
        case FlowParamError::BaselineLifetimeNotPositive: return "BaselineLifetimeNotPositive";
        case FlowParamError::LifetimeFactorBelowOne: return "LifetimeFactorBelowOne";
    }
    return "UnknownFlowParamError";
}

std::optional<FlowParamError> validate(const FlowModelParams& p) {
    if (!(p.res_r > 0.0) || !std::isfinite(p.res_r))
        return FlowParamError::ResourceRateNotPositive;
    if (!(p.prod_vol > 0.0) || !std::isfinite(p.prod_vol))
        return FlowParamError::ProductVolumeNotPositive;
    if (!(p.recy_r >= 0.0 && p.recy_r <= 1.0)) return FlowParamError::RecyclingRateOutOfRange;
    if (!(p.res_rec >= 0.0 && p.res_rec <= 1.0)) return FlowParamError::RecoveryRateOutOfRange;
    if (!(p.life_0 > 0.0) || !std::isfinite(p.life_0))
        return FlowParamError::BaselineLifetimeNotPositive;
    if (!(p.life_r >= 1.0) || !std::isfinite(p.life_r))
        return FlowParamError::LifetimeFactorBelowOne;
    return std::nullopt;
}

namespace {

void ensure_valid(const FlowModelParams& p) {
    if (const auto err = validate(p))
        throw InvalidParamsError("invalid flow model parameters: " +
                                 std::string(to_string(*err)));
}

double lifetime(const FlowModelParams& p, bool extended) {
    return extended ? p.life_0 * p.life_r : p.life_0;
}

} // namespace

double extraction_rate(const FlowModelParams& p, bool with_lifetime_extension) {
    ensure_valid(p);
    const double recovered_share = p.recy_r * p.res_rec;
    return p.res_r * p.prod_vol * (1.0 - recovered_share) / lifetime(p, with_lifetime_extension);
}

double returned_rate(const FlowModelParams& p, bool with_lifetime_extension) {
    ensure_valid(p);
    const double recovered_share = p.recy_r * p.res_rec;
    return p.res_r * p.prod_vol * recovered_share / lifetime(p, with_lifetime_extension);
}

ScenarioReport compare_scenarios(const FlowModelParams& p) {
    ensure_valid(p);
    return {
        extraction_rate(p, false), extraction_rate(p, true),
        returned_rate(p, false),   returned_rate(p, true),
        p.life_r, // extraction_baseline / extraction_extended, algebraically
    };
}

} // namespace fairga
