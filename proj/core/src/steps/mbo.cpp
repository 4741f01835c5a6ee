#include <algorithm>

#include "metaopt/steps.hpp"
#include "step_util.hpp"

namespace metaopt {
namespace {

struct Neighbor {
    double fit;
    std::vector<double> x;
};

// Gaussian perturbation with sigma = 0.1 (UB_j - LB_j) per coordinate; this
// is the continuous neighbor operator the V-formation machinery runs on.
Neighbor make_neighbor(const Agent& around, StepContext& ctx) {
    SearchSpace& s = ctx.space;
    Agent candidate(s.n);
    for (int j = 0; j < s.n; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const double sigma = 0.1 * (s.upper[ju] - s.lower[ju]);
        candidate.x[ju] = around.x[ju] + sigma * ctx.rng.normal();
    }
    clamp_to_bounds(candidate, s);
    const double fit = ctx.eval(candidate.x);
    return {fit, std::move(candidate.x)};
}

void sort_by_fitness(std::vector<Neighbor>& pool) {
    std::stable_sort(pool.begin(), pool.end(),
                     [](const Neighbor& a, const Neighbor& b) { return a.fit < b.fit; });
}

// Adopts the pool's best entry when it improves the bird, then returns the
// `shared` best unused entries to hand to the next bird in the line.
std::vector<Neighbor> consume_pool(Agent& bird, std::vector<Neighbor> pool, int shared) {
    sort_by_fitness(pool);
    std::size_t next = 0;
    if (!pool.empty() && pool[0].fit < bird.fit) {
        bird.fit = pool[0].fit;
        bird.x = std::move(pool[0].x);
        next = 1;
    }
    std::vector<Neighbor> handed;
    for (std::size_t i = next; i < pool.size() && handed.size() < static_cast<std::size_t>(shared); ++i)
        handed.push_back(std::move(pool[i]));
    return handed;
}

} // namespace

// Migrating birds optimization over a V-formation. Each iteration the leader
// generates k neighbors and both lines inherit candidates down the wing:
//
//   leader:    k fresh neighbors; adopts the best improving one; the x best
//              unused go to the left line's head, the next x to the right's
//   followers: k - x fresh neighbors plus the x handed down from the bird in
//              front; adopt-if-better, then pass the x best unused onward
//
// After leader_period iterations the leader retires to the tail of one line
// (alternating sides) and that line's front bird takes over. Evaluations per
// iteration: k + (m - 1)(k - x).
void mbo_step(StepContext& ctx) {
    SearchSpace& s = ctx.space;
    const auto& p = std::get<MboParams>(s.params);
    MboFormation& formation = ctx.state.formation;

    Agent& leader = s.agents[static_cast<std::size_t>(formation.leader)];
    std::vector<Neighbor> pool;
    pool.reserve(static_cast<std::size_t>(p.neighbors));
    for (int c = 0; c < p.neighbors; ++c) pool.push_back(make_neighbor(leader, ctx));

    sort_by_fitness(pool);
    std::size_t next = 0;
    if (pool[0].fit < leader.fit) {
        leader.fit = pool[0].fit;
        leader.x = pool[0].x;
        next = 1;
    }
    std::vector<Neighbor> to_left, to_right;
    for (int c = 0; c < p.shared && next < pool.size(); ++c)
        to_left.push_back(std::move(pool[next++]));
    for (int c = 0; c < p.shared && next < pool.size(); ++c)
        to_right.push_back(std::move(pool[next++]));

    auto process_line = [&](const std::vector<int>& line, std::vector<Neighbor> handed) {
        for (int index : line) {
            Agent& bird = s.agents[static_cast<std::size_t>(index)];
            std::vector<Neighbor> bird_pool = std::move(handed);
            for (int c = 0; c < p.neighbors - p.shared; ++c)
                bird_pool.push_back(make_neighbor(bird, ctx));
            handed = consume_pool(bird, std::move(bird_pool), p.shared);
        }
    };
    process_line(formation.left, std::move(to_left));
    process_line(formation.right, std::move(to_right));

    update_global_best(s);
    if (--ctx.state.rotation_countdown <= 0) {
        mbo_rotate(formation);
        ctx.state.rotation_countdown = p.leader_period;
    }
}

} // namespace metaopt
