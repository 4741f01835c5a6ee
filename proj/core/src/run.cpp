#include "metaopt/run.hpp"

#include <chrono>

#include "metaopt/error.hpp"
#include "metaopt/steps.hpp"

namespace metaopt {

RunResult optimize(SearchSpace space, const ObjectiveFunction& f, std::uint64_t seed,
                   const IterationObserver& observer) {
    const ValidationReport report = check_search_space(space);
    if (!report)
        throw Error("optimize: invalid search space: " + report.to_string());
    if (!f.accepts_dimension(space.n))
        throw Error("optimize: objective '" + f.name + "' expects dimension " +
                    f.arity_description() + ", space has " + std::to_string(space.n));

    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    Evaluator eval(f);

    initialize_search_space(space, rng);
    for (auto& a : space.agents) {
        eval(a);
        if (!a.best_x.empty()) {
            // Personal bests start at the initial position.
            a.best_x = a.x;
            a.best_fit = a.fit;
        }
    }
    update_global_best(space);

    TechniqueState state = init_technique_state(space);
    RunResult result;
    result.seed = seed;
    result.trace.reserve(static_cast<std::size_t>(space.iterations));

    StepContext ctx{space, eval, rng, state, 0};
    for (int iteration = 0; iteration < space.iterations; ++iteration) {
        ctx.iteration = iteration;
        technique_step(space.technique, ctx);
        update_global_best(space);
        result.trace.push_back(space.best_fitness);
        if (observer) observer(space, iteration);
    }

    result.best_position = space.best_position;
    result.best_fitness = space.best_fitness;
    result.evaluations = eval.count();
    if (space.best_tensor) result.best_tensor = space.best_tensor;
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace metaopt
