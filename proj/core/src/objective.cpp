#include "fairga/objective.hpp"

#include <cmath>
#include <utility>

namespace fairga {

double eval_berlich(std::span<const double> x) {
    double s = 0.0;
    for (const double xi : x) s += xi * xi;
    return (std::cos(s) + 2.0) * s;
}

double eval_schwefel(std::span<const double> x) {
    double acc = 0.0;
    for (const double xi : x) acc += xi * std::sin(std::sqrt(std::abs(xi)));
    return -0.5 * acc;
}

Objective::Objective(ObjectiveId id, std::string name, std::vector<Bounds> bounds, EvalFn fn,
                     std::optional<double> known_optimum)
    : id_(id),
      name_(std::move(name)),
      bounds_(std::move(bounds)),
      fn_(std::move(fn)),
      known_optimum_(known_optimum) {}

Objective Objective::berlich(int dimension) {
    if (dimension < 1) throw InvalidParamsError("objective dimension must be positive");
    std::vector<Bounds> box(static_cast<std::size_t>(dimension), Bounds{-10.0, 10.0});
    return Objective(ObjectiveId::BerlichNoisyParabola, "berlich", std::move(box), eval_berlich,
                     0.0);
}

Objective Objective::schwefel(int dimension) {
    if (dimension < 1) throw InvalidParamsError("objective dimension must be positive");
    std::vector<Bounds> box(static_cast<std::size_t>(dimension), Bounds{-500.0, 500.0});
    const std::vector<double> minimizer(static_cast<std::size_t>(dimension), 420.969);
    const double optimum = eval_schwefel(minimizer);
    return Objective(ObjectiveId::Schwefel, "schwefel", std::move(box), eval_schwefel, optimum);
}

Objective Objective::custom(std::string name, std::vector<Bounds> bounds, EvalFn fn,
                            std::optional<double> known_optimum) {
    if (bounds.empty()) throw InvalidParamsError("custom objective needs at least one dimension");
    for (const auto& b : bounds)
        if (!(b.low < b.high)) throw InvalidParamsError("objective bounds must satisfy low < high");
    if (!fn) throw InvalidParamsError("custom objective needs an evaluation callback");
    return Objective(ObjectiveId::Custom, std::move(name), std::move(bounds), std::move(fn),
                     known_optimum);
}

std::optional<Objective> Objective::by_name(std::string_view name) {
    if (name == "berlich") return berlich();
    if (name == "schwefel") return schwefel();
    return std::nullopt;
}

bool Objective::contains(std::span<const double> x) const {
    if (x.size() != bounds_.size()) return false;
    for (std::size_t d = 0; d < x.size(); ++d)
        if (!(x[d] >= bounds_[d].low && x[d] <= bounds_[d].high)) return false;
    return true;
}

double Objective::evaluate(std::span<const double> x) const {
    if (x.size() != bounds_.size())
        throw DimensionMismatchError("point dimension does not match the objective");
    for (std::size_t d = 0; d < x.size(); ++d)
        if (!(x[d] >= bounds_[d].low && x[d] <= bounds_[d].high))
            throw OutOfBoundsError("coordinate outside the objective's box");
    return fn_(x);
}

double counted_eval(const Objective& obj, EvalCounter& counter, std::span<const double> x) {
    const double value = obj.evaluate(x);
    ++counter.count;
    return value;
}

} // namespace fairga
