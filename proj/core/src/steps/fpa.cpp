#include "metaopt/steps.hpp"
#include "step_util.hpp"

namespace metaopt {

// Flower pollination. Per flower i, with u ~ U(0,1):
//
//   u <  p:  y_j = x_ij + 0.01 L_j (g_j - x_ij)      global pollination,
//            L_j a Mantegna Levy draw per coordinate
//   u >= p:  y   = x_i + eps (x_a - x_b)             local pollination,
//            eps ~ U(0,1), a, b distinct random flowers
//
// The clamped candidate replaces the flower only when it improves it.
// Evaluations per iteration: m.
void fpa_step(StepContext& ctx) {
    SearchSpace& s = ctx.space;
    const auto& p = std::get<FpaParams>(s.params);

    Agent candidate(s.n);
    for (int i = 0; i < s.m; ++i) {
        Agent& a = s.agents[static_cast<std::size_t>(i)];
        if (ctx.rng.uniform() < p.p) {
            for (int j = 0; j < s.n; ++j) {
                const auto ju = static_cast<std::size_t>(j);
                const double levy = mantegna_step(p.beta, ctx.rng);
                candidate.x[ju] = a.x[ju] + 0.01 * levy * (s.best_position[ju] - a.x[ju]);
            }
        } else {
            const double eps = ctx.rng.uniform();
            const int other_a = ctx.rng.uniform_int(0, s.m - 1);
            const int other_b = ctx.rng.uniform_int(0, s.m - 1);
            const auto& xa = s.agents[static_cast<std::size_t>(other_a)].x;
            const auto& xb = s.agents[static_cast<std::size_t>(other_b)].x;
            for (int j = 0; j < s.n; ++j) {
                const auto ju = static_cast<std::size_t>(j);
                candidate.x[ju] = a.x[ju] + eps * (xa[ju] - xb[ju]);
            }
        }
        clamp_to_bounds(candidate, s);
        const double fit = ctx.eval(candidate.x);
        if (fit < a.fit) {
            a.x = candidate.x;
            a.fit = fit;
        }
    }
    update_global_best(s);
}

} // namespace metaopt
