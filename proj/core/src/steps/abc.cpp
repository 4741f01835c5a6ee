#include "metaopt/steps.hpp"
#include "step_util.hpp"

namespace metaopt {
namespace {

// One employed/onlooker move: perturb a single random coordinate of source i
// against a random partner k != i,
//
//   y_j = x_ij + phi (x_ij - x_kj),   phi ~ U(-1,1),
//
// and keep the candidate only if it improves the source (greedy selection).
// The trial counter resets on improvement and increments otherwise.
void bee_move(int i, StepContext& ctx) {
    SearchSpace& s = ctx.space;
    Agent& a = s.agents[static_cast<std::size_t>(i)];

    int partner = i;
    if (s.m > 1) {
        do {
            partner = ctx.rng.uniform_int(0, s.m - 1);
        } while (partner == i);
    }
    const int coord = ctx.rng.uniform_int(0, s.n - 1);
    const double phi = ctx.rng.uniform(-1.0, 1.0);

    Agent candidate(s.n);
    candidate.x = a.x;
    const auto cu = static_cast<std::size_t>(coord);
    candidate.x[cu] += phi * (a.x[cu] - s.agents[static_cast<std::size_t>(partner)].x[cu]);
    clamp_to_bounds(candidate, s);

    const double fit = ctx.eval(candidate.x);
    if (fit < a.fit) {
        a.x = std::move(candidate.x);
        a.fit = fit;
        a.trials = 0;
    } else {
        ++a.trials;
    }
}

} // namespace

// Artificial bee colony with m food sources. The employed phase visits every
// source once; a source whose trial counter has passed the limit is instead
// abandoned by its scout and re-drawn uniformly inside the bounds. The
// onlooker phase sends m onlookers to sources chosen by roulette over
// abc_selection_probabilities. Evaluations per iteration: 2m.
void abc_step(StepContext& ctx) {
    SearchSpace& s = ctx.space;
    const auto& p = std::get<AbcParams>(s.params);

    for (int i = 0; i < s.m; ++i) {
        Agent& a = s.agents[static_cast<std::size_t>(i)];
        if (a.trials > p.limit) {
            detail::uniform_reinit(a, s, ctx.rng);
            ctx.eval(a);
            a.trials = 0;
        } else {
            bee_move(i, ctx);
        }
    }

    std::vector<double> fits(static_cast<std::size_t>(s.m));
    for (int i = 0; i < s.m; ++i) fits[static_cast<std::size_t>(i)] = s.agents[static_cast<std::size_t>(i)].fit;
    const std::vector<double> probabilities = abc_selection_probabilities(fits);

    for (int onlooker = 0; onlooker < s.m; ++onlooker) {
        const double pick = ctx.rng.uniform();
        double cumulative = 0.0;
        int chosen = s.m - 1;
        for (int i = 0; i < s.m; ++i) {
            cumulative += probabilities[static_cast<std::size_t>(i)];
            if (pick < cumulative) {
                chosen = i;
                break;
            }
        }
        bee_move(chosen, ctx);
    }
    update_global_best(s);
}

} // namespace metaopt
