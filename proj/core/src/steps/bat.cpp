#include <cmath>

#include "metaopt/steps.hpp"
#include "step_util.hpp"

namespace metaopt {

// Bat algorithm. Per bat i, with beta, u ~ U(0,1):
//
//   freq   = f_min + (f_max - f_min) beta
//   v_i   <- v_i + (x_i - g) freq
//   y      = x_i + v_i                          (candidate)
//   if u >= r_i:  y = g + eps mean(A),  eps ~ U(-1,1) per coordinate
//
// The clamped candidate is evaluated (m evaluations per iteration) and
// accepted when rand < A_i and it is no worse than the bat's current
// position; on acceptance the loudness decays and the pulse rate ramps up:
//
//   A_i <- alpha A_i
//   r_i <- r0 (1 - e^(-gamma t)),  t = 1-based iteration index
void ba_step(StepContext& ctx) {
    SearchSpace& s = ctx.space;
    const auto& p = std::get<BaParams>(s.params);

    double mean_loudness = 0.0;
    for (const auto& a : s.agents) mean_loudness += a.loudness;
    mean_loudness /= s.m;

    Agent candidate(s.n);
    for (auto& a : s.agents) {
        const double freq = p.f_min + (p.f_max - p.f_min) * ctx.rng.uniform();
        for (int j = 0; j < s.n; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            a.velocity[ju] += (a.x[ju] - s.best_position[ju]) * freq;
            candidate.x[ju] = a.x[ju] + a.velocity[ju];
        }
        if (ctx.rng.uniform() >= a.pulse_rate) {
            // Local walk around the best position, scaled by the mean loudness.
            for (int j = 0; j < s.n; ++j) {
                const auto ju = static_cast<std::size_t>(j);
                candidate.x[ju] = s.best_position[ju] + ctx.rng.uniform(-1.0, 1.0) * mean_loudness;
            }
        }
        clamp_to_bounds(candidate, s);
        const double fit = ctx.eval(candidate.x);
        if (ctx.rng.uniform() < a.loudness && fit <= a.fit) {
            a.x = candidate.x;
            a.fit = fit;
            for (int j = 0; j < s.n; ++j) {
                const auto ju = static_cast<std::size_t>(j);
                if (a.x[ju] <= s.lower[ju] || a.x[ju] >= s.upper[ju]) a.velocity[ju] = 0.0;
            }
            a.loudness *= p.alpha;
            a.pulse_rate =
                p.pulse_rate * (1.0 - std::exp(-p.gamma * static_cast<double>(ctx.iteration + 1)));
        }
    }
    update_global_best(s);
}

} // namespace metaopt
