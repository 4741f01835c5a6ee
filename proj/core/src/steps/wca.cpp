#include <algorithm>
#include <numeric>

#include "metaopt/steps.hpp"
#include "step_util.hpp"

namespace metaopt {

// Water cycle algorithm. Agents are ranked by fitness each iteration: the
// best is the sea, the next n_sr - 1 are rivers, the rest are streams
// distributed over sea and rivers by wca_stream_allocation. Flows, with a
// scalar u ~ U(0,2) per mover:
//
//   stream: x <- x + u (x_guide - x),   guide = its river or the sea
//   river:  x <- x + u (x_sea - x)
//
// A river that closes within d_max of the sea evaporates: it and its streams
// are re-drawn uniformly (raining). d_max shrinks by d_max/iterations each
// iteration. The sea never moves; everything else is re-evaluated, so one
// iteration costs m - 1 evaluations.
void wca_step(StepContext& ctx) {
    SearchSpace& s = ctx.space;
    const auto& p = std::get<WcaParams>(s.params);
    const std::size_t n_sr = static_cast<std::size_t>(p.n_sr);

    // ranked[r] = agent index holding rank r (0 = sea).
    std::vector<std::size_t> ranked(s.agents.size());
    std::iota(ranked.begin(), ranked.end(), 0);
    std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
        return s.agents[a].fit < s.agents[b].fit;
    });
    auto agent_at_rank = [&](std::size_t rank) -> Agent& { return s.agents[ranked[rank]]; };

    std::vector<double> leader_fits(n_sr);
    for (std::size_t r = 0; r < n_sr; ++r) leader_fits[r] = agent_at_rank(r).fit;
    const std::vector<int> allocation = wca_stream_allocation(leader_fits, s.m - p.n_sr);

    // guide[r] = leader rank that the stream at rank r flows toward.
    std::vector<std::size_t> guide(s.agents.size(), 0);
    {
        std::size_t rank = n_sr;
        for (std::size_t leader = 0; leader < n_sr; ++leader)
            for (int c = 0; c < allocation[leader]; ++c) guide[rank++] = leader;
    }

    const std::vector<double> sea_x = agent_at_rank(0).x;

    for (std::size_t rank = 1; rank < ranked.size(); ++rank) {
        Agent& mover = agent_at_rank(rank);
        const std::vector<double>& target = rank < n_sr ? sea_x : agent_at_rank(guide[rank]).x;
        const double u = ctx.rng.uniform(0.0, 2.0);
        for (std::size_t j = 0; j < mover.x.size(); ++j) mover.x[j] += u * (target[j] - mover.x[j]);
        clamp_to_bounds(mover, s);
    }

    for (std::size_t river = 1; river < n_sr; ++river) {
        if (detail::euclidean_distance(agent_at_rank(river).x, sea_x) >= ctx.state.wca_dmax)
            continue;
        detail::uniform_reinit(agent_at_rank(river), s, ctx.rng);
        for (std::size_t rank = n_sr; rank < ranked.size(); ++rank) {
            if (guide[rank] == river) detail::uniform_reinit(agent_at_rank(rank), s, ctx.rng);
        }
    }

    for (std::size_t rank = 1; rank < ranked.size(); ++rank) ctx.eval(agent_at_rank(rank));
    update_global_best(s);

    if (s.iterations > 0) ctx.state.wca_dmax -= ctx.state.wca_dmax / s.iterations;
}

} // namespace metaopt
