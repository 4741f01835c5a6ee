#include <cmath>

#include "metaopt/steps.hpp"
#include "step_util.hpp"

namespace metaopt {
namespace {

// Improvises one harmony. Per variable j, with u ~ U(0,1):
//
//   u <  hmcr_j:  h_j = memory[i][j] for a random slot i   (memory consideration)
//                 then with probability par_j:
//                 h_j <- h_j + U(-1,1) bw_j                 (pitch adjustment)
//   u >= hmcr_j:  h_j ~ U(LB_j, UB_j)                       (random selection)
//
// The clamped harmony is evaluated (the iteration's single evaluation) and
// replaces the worst memory slot only when strictly better. Returns the slot
// replaced, or -1.
template <typename HmcrFn, typename ParFn, typename BwFn>
int improvise(StepContext& ctx, HmcrFn hmcr_of, ParFn par_of, BwFn bw_of,
              std::vector<HsOperation>* ops_out) {
    SearchSpace& s = ctx.space;
    Agent harmony(s.n);
    if (ops_out) ops_out->assign(static_cast<std::size_t>(s.n), HsOperation::Random);

    for (int j = 0; j < s.n; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        HsOperation op = HsOperation::Random;
        if (ctx.rng.uniform() < hmcr_of(j)) {
            const int slot = ctx.rng.uniform_int(0, s.m - 1);
            harmony.x[ju] = s.agents[static_cast<std::size_t>(slot)].x[ju];
            op = HsOperation::Memory;
            if (ctx.rng.uniform() < par_of(j)) {
                harmony.x[ju] += ctx.rng.uniform(-1.0, 1.0) * bw_of(j);
                op = HsOperation::Pitch;
            }
        } else {
            harmony.x[ju] = ctx.rng.uniform(s.lower[ju], s.upper[ju]);
        }
        if (ops_out) (*ops_out)[ju] = op;
    }
    clamp_to_bounds(harmony, s);
    ctx.eval(harmony);

    int worst = 0;
    for (int i = 1; i < s.m; ++i) {
        if (s.agents[static_cast<std::size_t>(i)].fit > s.agents[static_cast<std::size_t>(worst)].fit)
            worst = i;
    }
    if (harmony.fit < s.agents[static_cast<std::size_t>(worst)].fit) {
        s.agents[static_cast<std::size_t>(worst)].x = std::move(harmony.x);
        s.agents[static_cast<std::size_t>(worst)].fit = harmony.fit;
        update_global_best(s);
        return worst;
    }
    update_global_best(s);
    return -1;
}

} // namespace

void hs_step(StepContext& ctx) {
    const auto& p = std::get<HsParams>(ctx.space.params);
    improvise(
        ctx, [&](int) { return p.hmcr; }, [&](int) { return p.par; },
        [&](int) { return p.bandwidth; }, nullptr);
}

namespace {

// Schedule fraction q = t / (T - 1), 0 when the budget has a single iteration.
double schedule_fraction(int iteration, int total_iterations) {
    return total_iterations > 1 ? static_cast<double>(iteration) / (total_iterations - 1) : 0.0;
}

} // namespace

double ihs_pitch_rate(const IhsParams& p, int iteration, int total_iterations) {
    return p.par_min + (p.par_max - p.par_min) * schedule_fraction(iteration, total_iterations);
}

double ihs_bandwidth(const IhsParams& p, int iteration, int total_iterations) {
    return p.bw_max *
           std::exp(std::log(p.bw_min / p.bw_max) * schedule_fraction(iteration, total_iterations));
}

// Improved harmony search: HS with scheduled pitch parameters,
//
//   par(t) = par_min + (par_max - par_min) q          (linear ramp)
//   bw(t)  = bw_max exp(ln(bw_min / bw_max) q)        (exponential decay)
//
// with q the schedule fraction above, so par(0) = par_min, bw(0) = bw_max
// and the last iteration reaches par_max / bw_min.
void ihs_step(StepContext& ctx) {
    const auto& p = std::get<IhsParams>(ctx.space.params);
    const double par = ihs_pitch_rate(p, ctx.iteration, ctx.space.iterations);
    const double bw = ihs_bandwidth(p, ctx.iteration, ctx.space.iterations);
    improvise(
        ctx, [&](int) { return p.hmcr; }, [&](int) { return par; }, [&](int) { return bw; },
        nullptr);
}

// Parameter-setting-free harmony search. The operation memory records, for
// every memory slot and variable, which operation produced the stored value
// (all slots start as Random). The first m iterations rehearse with fixed
// hmcr = par = 0.5; afterwards the per-variable rates are re-derived each
// iteration from the operation memory via psfhs_rates, i.e. hmcr_j is the
// observed memory-use frequency in column j, and the pitch rate is the
// pitch-adjusted fraction of those uses floored at 1/m. The pitch bandwidth
// is the spread of memory column j (max - min, floored at 1e-6 of the
// variable range), so adjustments sharpen as the memory converges without
// ever vanishing.
void psfhs_step(StepContext& ctx) {
    SearchSpace& s = ctx.space;
    TechniqueState& st = ctx.state;

    std::vector<HsOperation> ops;
    const int replaced = improvise(
        ctx, [&](int j) { return st.hmcr[static_cast<std::size_t>(j)]; },
        [&](int j) { return st.par[static_cast<std::size_t>(j)]; },
        [&](int j) {
            const auto ju = static_cast<std::size_t>(j);
            double lo = s.agents[0].x[ju], hi = lo;
            for (const auto& a : s.agents) {
                lo = std::min(lo, a.x[ju]);
                hi = std::max(hi, a.x[ju]);
            }
            return std::max(hi - lo, 1e-6 * (s.upper[ju] - s.lower[ju]));
        },
        &ops);

    if (replaced >= 0) {
        for (int j = 0; j < s.n; ++j)
            st.operation_memory[static_cast<std::size_t>(replaced) * s.n + j] =
                ops[static_cast<std::size_t>(j)];
    }
    if (ctx.iteration + 1 >= st.rehearsal) {
        PsfhsRates rates = psfhs_rates(st.operation_memory, s.m, s.n);
        st.hmcr = std::move(rates.hmcr);
        st.par = std::move(rates.par);
    }
}

} // namespace metaopt
