#ifndef METAOPT_RUN_HPP
#define METAOPT_RUN_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "metaopt/agent.hpp"
#include "metaopt/objective.hpp"
#include "metaopt/search_space.hpp"

namespace metaopt {

/// Outcome of one run: the best position/fitness found, the global-best
/// fitness after every iteration (non-increasing, last entry ==
/// best_fitness), the exact evaluation count, the seed that reproduces the
/// run and the wall time. best_tensor is set by hypercomplex runs.
struct RunResult {
    std::vector<double> best_position;
    double best_fitness = worst_fitness();
    std::vector<double> trace;
    long long evaluations = 0;
    std::uint64_t seed = 0;
    double elapsed_seconds = 0.0;
    std::optional<Tensor> best_tensor;
};

/// Invoked after every completed iteration with the live space and the
/// 0-based iteration index; used by tests and tooling to observe
/// per-iteration state. Must not mutate the space.
using IterationObserver = std::function<void(const SearchSpace&, int iteration)>;

/// Runs one seeded optimization: validates the space, draws the initial
/// population from the seed, evaluates it (m evaluations), then executes the
/// technique's step once per budgeted iteration, recording the global best
/// fitness after each. Identical (space, objective, seed) inputs produce
/// identical results except for elapsed_seconds. Initialization evaluations
/// are extra: the budget counts iterations only, and a zero-iteration run
/// returns the best of the initial population with an empty trace.
///
/// Throws Error when validation fails or the objective's arity does not
/// match the space dimension; nothing is evaluated in that case.
RunResult optimize(SearchSpace space, const ObjectiveFunction& f, std::uint64_t seed,
                   const IterationObserver& observer = {});

} // namespace metaopt

#endif
