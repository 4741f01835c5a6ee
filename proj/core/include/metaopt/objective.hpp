#ifndef METAOPT_OBJECTIVE_HPP
#define METAOPT_OBJECTIVE_HPP

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace metaopt {

/// Fitness assigned when an objective returns NaN or +/-infinity. Using the
/// largest finite double keeps ordinary less-than comparisons meaningful, so
/// a failed evaluation can never displace a real best.
constexpr double worst_fitness() noexcept { return std::numeric_limits<double>::max(); }

/// A known minimizer and its objective value.
struct Optimum {
    std::vector<double> position;
    double value = 0.0;
};

/// A function to be minimized. Objectives receive the bare position vector;
/// they must be pure and deterministic.
struct ObjectiveFunction {
    static constexpr int kAnyArity = -1;

    std::string name;
    int arity = kAnyArity; ///< fixed dimension, or kAnyArity for any d >= min_arity
    int min_arity = 1;     ///< smallest accepted dimension when arity == kAnyArity
    std::function<double(std::span<const double>)> eval;
    /// Known optimum for dimension d, when one exists at that dimension.
    std::function<std::optional<Optimum>(int d)> optimum;
    /// Conventional search interval for variable j.
    std::function<std::pair<double, double>(int j)> suggested_bounds;

    bool accepts_dimension(int d) const {
        return arity == kAnyArity ? d >= min_arity : d == arity;
    }

    /// Arity-checked evaluation; throws Error on a dimension mismatch.
    double operator()(std::span<const double> x) const;

    /// Human-readable arity ("2" or ">=1").
    std::string arity_description() const;
};

} // namespace metaopt

#endif
