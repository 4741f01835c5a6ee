#include <cmath>

#include "metaopt/steps.hpp"
#include "step_util.hpp"

namespace metaopt {

// Black hole algorithm. The current best agent is the black hole and never
// moves. Every other star drifts toward it,
//
//   x_ij <- x_ij + u_j (g_j - x_ij),   u_j ~ U(0,1) per coordinate,
//
// and a star whose distance to the black hole falls below the event-horizon
// radius R = |f_bh| / sum_i |f_i| is replaced by a fresh uniform draw inside
// the bounds. Moved or re-drawn stars are evaluated: m - 1 evaluations per
// iteration.
void bh_step(StepContext& ctx) {
    SearchSpace& s = ctx.space;

    int hole = 0;
    double hole_fit = s.agents[0].fit;
    double magnitude_sum = 0.0;
    for (int i = 0; i < s.m; ++i) {
        const double fit = s.agents[static_cast<std::size_t>(i)].fit;
        magnitude_sum += std::fabs(fit);
        if (fit < hole_fit) {
            hole_fit = fit;
            hole = i;
        }
    }
    const double radius = magnitude_sum > 0.0 ? std::fabs(hole_fit) / magnitude_sum : 0.0;
    const std::vector<double> hole_x = s.agents[static_cast<std::size_t>(hole)].x;

    for (int i = 0; i < s.m; ++i) {
        if (i == hole) continue;
        Agent& a = s.agents[static_cast<std::size_t>(i)];
        for (int j = 0; j < s.n; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            a.x[ju] += ctx.rng.uniform() * (hole_x[ju] - a.x[ju]);
        }
        clamp_to_bounds(a, s);
        if (detail::euclidean_distance(a.x, hole_x) < radius)
            detail::uniform_reinit(a, s, ctx.rng);
        ctx.eval(a);
    }
    update_global_best(s);
}

} // namespace metaopt
