#include "metaopt/steps.hpp"
#include "step_util.hpp"

namespace metaopt {
namespace {

// Shared by PSO and AIWPSO. Velocity and position updates, per particle i
// and coordinate j, with r1, r2 ~ U(0,1) drawn per coordinate:
//
//   v_ij <- w v_ij + c1 r1 (p_ij - x_ij) + c2 r2 (g_j - x_ij)
//   x_ij <- x_ij + v_ij
//
// p_i is the particle's best own position, g the global best. A coordinate
// pushed outside the box is clipped and its velocity component zeroed.
// Returns the number of particles whose personal best improved; evaluations
// per call: m.
int swarm_sweep(StepContext& ctx, double w, double c1, double c2) {
    SearchSpace& s = ctx.space;
    int improved = 0;
    for (auto& a : s.agents) {
        for (int j = 0; j < s.n; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            const double r1 = ctx.rng.uniform();
            const double r2 = ctx.rng.uniform();
            a.velocity[ju] = w * a.velocity[ju] + c1 * r1 * (a.best_x[ju] - a.x[ju]) +
                             c2 * r2 * (s.best_position[ju] - a.x[ju]);
            a.x[ju] += a.velocity[ju];
            if (a.x[ju] < s.lower[ju] || a.x[ju] > s.upper[ju]) a.velocity[ju] = 0.0;
        }
        clamp_to_bounds(a, s);
        ctx.eval(a);
        if (a.fit < a.best_fit) {
            a.best_fit = a.fit;
            a.best_x = a.x;
            ++improved;
        }
    }
    update_global_best(s);
    return improved;
}

} // namespace

void pso_step(StepContext& ctx) {
    const auto& p = std::get<PsoParams>(ctx.space.params);
    swarm_sweep(ctx, p.w, p.c1, p.c2);
}

// AIWPSO runs a plain swarm sweep, then re-derives the inertia weight from
// the population success rate Ps (fraction of particles that improved their
// personal best this iteration):
//
//   w <- w_min + (w_max - w_min) Ps
//
// The adapted w takes effect on the next iteration; the first iteration
// uses the configured starting w.
void aiwpso_step(StepContext& ctx) {
    const auto& p = std::get<AiwpsoParams>(ctx.space.params);
    const int improved = swarm_sweep(ctx, ctx.state.inertia, p.c1, p.c2);
    const double success_rate = static_cast<double>(improved) / ctx.space.m;
    ctx.state.inertia = p.w_min * (1.0 - success_rate) + p.w_max * success_rate;
}

} // namespace metaopt
