#ifndef METAOPT_SEARCH_SPACE_HPP
#define METAOPT_SEARCH_SPACE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metaopt/agent.hpp"
#include "metaopt/objective.hpp"
#include "metaopt/rng.hpp"
#include "metaopt/technique.hpp"

namespace metaopt {

/// Population plus problem metadata: box bounds, iteration budget, the
/// global-best record and the technique parameters. A space is owned by a
/// single run at a time; nothing here is synchronized.
struct SearchSpace {
    Technique technique = Technique::PSO;
    int m = 0;          ///< number of agents
    int n = 0;          ///< decision variables
    int iterations = 0; ///< iteration budget

    std::vector<Agent> agents;
    std::vector<double> lower; ///< per-variable lower bounds
    std::vector<double> upper; ///< per-variable upper bounds

    std::vector<double> best_position;  ///< g, position that achieved best_fitness
    std::optional<Tensor> best_tensor;  ///< t_g, set only in hypercomplex runs
    int best = 0;                       ///< index of the agent that last improved the record
    double best_fitness = worst_fitness(); ///< gfit, non-increasing over a run

    bool integer_valued = false; ///< round every position to the nearest integer
    TechniqueParams params;
};

/// Allocates a population of m agents with n variables each and the extras
/// the technique needs; parameters start at the technique defaults and bounds
/// are left unset. Throws Error on m < 1 or n < 1.
SearchSpace create_search_space(int m, int n, Technique technique);

/// Sets per-variable bounds. Sizes must equal n.
void set_bounds(SearchSpace& s, std::span<const double> lower, std::span<const double> upper);

/// Sets the same interval for every variable.
void set_bounds(SearchSpace& s, double lower, double upper);

/// Draws every agent position uniformly inside the bounds (rounded in
/// integer mode) and resets the per-technique extras to their starting
/// values: zero velocities, trial counters at zero, BA loudness/pulse from
/// the parameters. Throws Error when the bounds are unset.
void initialize_search_space(SearchSpace& s, Rng& rng);

/// Outcome of check_search_space: empty issue list means the space is valid.
struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
    explicit operator bool() const { return ok(); }
    std::string to_string() const;
};

/// Validates sizes, a non-negative iteration budget, strictly ordered bounds
/// and the technique parameters. Never throws; every failed check lands in
/// the report.
ValidationReport check_search_space(const SearchSpace& s);

/// Evaluates the agent position, storing (and returning) the fitness. A
/// non-finite objective value is replaced by the worst-fitness sentinel.
double evaluate_agent(Agent& a, const ObjectiveFunction& f);

/// Clips the agent into the bounds; in integer mode the position is rounded
/// to the nearest integer first, then clipped.
void clamp_to_bounds(Agent& a, const SearchSpace& s);

/// Folds the current population into the global-best record. Strict
/// improvement is required, so earlier agents win ties and the record is
/// non-increasing across calls.
void update_global_best(SearchSpace& s);

} // namespace metaopt

#endif
