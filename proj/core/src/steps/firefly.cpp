#include <cmath>

#include "metaopt/steps.hpp"
#include "step_util.hpp"

namespace metaopt {

// Firefly algorithm. Light intensities are frozen at the start of the
// iteration; firefly i is pulled toward every brighter j (lower fitness):
//
//   x_ij <- x_ij + beta0 e^(-gamma r^2) (x_jj' - x_ij) + alpha_t (u - 0.5) (UB_j - LB_j)
//
// with r the Euclidean distance between the pair, u ~ U(0,1) per coordinate
// and alpha_t = alpha * decay^t the geometrically shrinking randomization
// weight. The brightest firefly does not move. All fireflies are re-evaluated
// after the sweep: m evaluations per iteration.
void fa_step(StepContext& ctx) {
    SearchSpace& s = ctx.space;
    const auto& p = std::get<FaParams>(s.params);
    const double alpha = ctx.state.fa_alpha;

    std::vector<double> intensity(static_cast<std::size_t>(s.m));
    for (int i = 0; i < s.m; ++i) intensity[static_cast<std::size_t>(i)] = s.agents[static_cast<std::size_t>(i)].fit;

    for (int i = 0; i < s.m; ++i) {
        Agent& a = s.agents[static_cast<std::size_t>(i)];
        for (int j = 0; j < s.m; ++j) {
            if (intensity[static_cast<std::size_t>(j)] >= intensity[static_cast<std::size_t>(i)])
                continue;
            const Agent& b = s.agents[static_cast<std::size_t>(j)];
            const double r = detail::euclidean_distance(a.x, b.x);
            const double attraction = p.beta0 * std::exp(-p.gamma * r * r);
            for (int d = 0; d < s.n; ++d) {
                const auto du = static_cast<std::size_t>(d);
                const double range = s.upper[du] - s.lower[du];
                a.x[du] += attraction * (b.x[du] - a.x[du]) +
                           alpha * (ctx.rng.uniform() - 0.5) * range;
            }
        }
        clamp_to_bounds(a, s);
    }
    for (auto& a : s.agents) ctx.eval(a);
    update_global_best(s);
    ctx.state.fa_alpha *= ctx.state.fa_decay;
}

} // namespace metaopt
