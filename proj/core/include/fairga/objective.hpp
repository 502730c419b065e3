#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairga/config.hpp"
#include "fairga/errors.hpp"

namespace fairga {

/// Per-dimension search box.
struct Bounds {
    double low = 0.0;
    double high = 1.0;

    bool operator==(const Bounds&) const = default;
};

/// f1 = (cos(s) + 2) * s with s = sum of squared coordinates.
/// Global minimum 0 at the origin; deterministic despite the historical
/// "noisy parabola" name. For any x, the value lies in [s, 3s].
double eval_berlich(std::span<const double> x);

/// f2 = -1/2 * sum of x_i * sin(sqrt(|x_i|)). On the conventional
/// [-500, 500] box the global minimum sits near x_i = 420.969 with value
/// about -418.983 per pair of dimensions at the 2-D default.
double eval_schwefel(std::span<const double> x);

/// A minimization objective: a pure evaluation callback plus its box.
/// Custom functions register through the same interface as the built-ins.
class Objective {
public:
    using EvalFn = std::function<double(std::span<const double>)>;

    /// f1 on [-10, 10]^d, default d = 2.
    static Objective berlich(int dimension = 2);

    /// f2 on [-500, 500]^d, default d = 2.
    static Objective schwefel(int dimension = 2);

    /// Any user-supplied pure function; the bounds vector fixes the
    /// dimension. Throws InvalidParamsError on empty or inverted bounds.
    static Objective custom(std::string name, std::vector<Bounds> bounds, EvalFn fn,
                            std::optional<double> known_optimum = std::nullopt);

    /// Lookup by CLI name: "berlich" or "schwefel".
    static std::optional<Objective> by_name(std::string_view name);

    ObjectiveId id() const { return id_; }
    const std::string& name() const { return name_; }
    int dimension() const { return static_cast<int>(bounds_.size()); }
    const std::vector<Bounds>& bounds() const { return bounds_; }
    const Bounds& bounds(std::size_t dim) const { return bounds_[dim]; }

    /// Best known objective value, when one is known. Used only as the
    /// reference point for "reached the optimum" thresholds.
    std::optional<double> known_optimum() const { return known_optimum_; }

    /// True when every coordinate lies inside the closed box.
    bool contains(std::span<const double> x) const;

    /// Evaluates the function at x. Throws DimensionMismatchError on a
    /// wrong-length vector and OutOfBoundsError outside the box.
    double evaluate(std::span<const double> x) const;

private:
    Objective(ObjectiveId id, std::string name, std::vector<Bounds> bounds, EvalFn fn,
              std::optional<double> known_optimum);

    ObjectiveId id_;
    std::string name_;
    std::vector<Bounds> bounds_;
    EvalFn fn_;
    std::optional<double> known_optimum_;
};

/// Evaluation meter. Engines route every real objective call through
/// counted_eval, so the final count exposes how much work actually ran.
struct EvalCounter {
    std::uint64_t count = 0;
};

/// Same value as obj.evaluate(x); on success the counter grows by exactly
/// one. Errors propagate without counting.
double counted_eval(const Objective& obj, EvalCounter& counter, std::span<const double> x);

} // namespace fairga
