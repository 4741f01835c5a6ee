#include "metaopt/steps.hpp"
#include "step_util.hpp"

namespace metaopt {

// Cuckoo search. Phase one lays one cuckoo egg per nest via a Levy flight
// anchored at the global best,
//
//   y_j = x_ij + alpha L_j (x_ij - g_j),   L_j a Mantegna draw per coordinate,
//
// keeping the candidate only when it improves that nest (the best nest's
// flight has zero amplitude, so it is never degraded). Phase two abandons
// each non-best nest with probability pa, rebuilding it by a biased random
// walk over nest differences,
//
//   x_i <- x_i + u (x_r1 - x_r2),   u ~ U(0,1), r1, r2 random nests,
//
// and re-evaluates the population. Evaluations per iteration: 2m.
void cs_step(StepContext& ctx) {
    SearchSpace& s = ctx.space;
    const auto& p = std::get<CsParams>(s.params);

    Agent candidate(s.n);
    for (auto& a : s.agents) {
        for (int j = 0; j < s.n; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            const double levy = mantegna_step(p.beta, ctx.rng);
            candidate.x[ju] = a.x[ju] + p.alpha * levy * (a.x[ju] - s.best_position[ju]);
        }
        clamp_to_bounds(candidate, s);
        const double fit = ctx.eval(candidate.x);
        if (fit < a.fit) {
            a.x = candidate.x;
            a.fit = fit;
        }
    }
    update_global_best(s);

    int best_index = 0;
    double best_fit = s.agents[0].fit;
    for (int i = 1; i < s.m; ++i) {
        if (s.agents[static_cast<std::size_t>(i)].fit < best_fit) {
            best_fit = s.agents[static_cast<std::size_t>(i)].fit;
            best_index = i;
        }
    }
    for (int i = 0; i < s.m; ++i) {
        Agent& a = s.agents[static_cast<std::size_t>(i)];
        if (i != best_index && ctx.rng.uniform() < p.pa) {
            const double u = ctx.rng.uniform();
            const int r1 = ctx.rng.uniform_int(0, s.m - 1);
            int r2 = r1;
            while (r2 == r1) r2 = ctx.rng.uniform_int(0, s.m - 1);
            const auto& xa = s.agents[static_cast<std::size_t>(r1)].x;
            const auto& xb = s.agents[static_cast<std::size_t>(r2)].x;
            for (int j = 0; j < s.n; ++j) {
                const auto ju = static_cast<std::size_t>(j);
                a.x[ju] += u * (xa[ju] - xb[ju]);
            }
            clamp_to_bounds(a, s);
        }
        ctx.eval(a);
    }
    update_global_best(s);
}

} // namespace metaopt
