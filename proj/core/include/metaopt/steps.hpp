#ifndef METAOPT_STEPS_HPP
#define METAOPT_STEPS_HPP

#include <span>
#include <vector>

#include "metaopt/objective.hpp"
#include "metaopt/rng.hpp"
#include "metaopt/search_space.hpp"

namespace metaopt {

/// Counts objective evaluations and applies the worst-fitness sentinel to
/// non-finite values. Every evaluation inside a step must go through one of
/// these calls so the run's evaluation accounting stays exact.
class Evaluator {
public:
    explicit Evaluator(const ObjectiveFunction& f) : f_(&f) {}

    double operator()(Agent& a) {
        ++count_;
        const double v = (*f_)(a.x);
        a.fit = std::isfinite(v) ? v : worst_fitness();
        return a.fit;
    }

    double operator()(std::span<const double> x) {
        ++count_;
        const double v = (*f_)(x);
        return std::isfinite(v) ? v : worst_fitness();
    }

    long long count() const { return count_; }

private:
    const ObjectiveFunction* f_;
    long long count_ = 0;
};

/// V-formation bookkeeping for MBO: the leader plus two trailing lines.
struct MboFormation {
    int leader = 0;
    std::vector<int> left;
    std::vector<int> right;
    bool rotate_left_next = true;
};

/// Sends the leader to the tail of one line (alternating sides) and promotes
/// that line's front bird. A no-op while the formation has a single bird.
void mbo_rotate(MboFormation& formation);

/// Provenance of one harmony-memory value, recorded per slot and variable.
enum class HsOperation : unsigned char { Random, Memory, Pitch };

/// Per-variable rates derived from an m-by-n operation memory: hmcr[j] is the
/// fraction of column j produced by memory consideration (with or without a
/// pitch adjustment); par[j] is the pitch-adjusted fraction of those.
struct PsfhsRates {
    std::vector<double> hmcr;
    std::vector<double> par;
};
PsfhsRates psfhs_rates(const std::vector<HsOperation>& operation_memory, int m, int n);

/// Roulette weights over food sources: quality 1/(1+f) for f >= 0 and
/// 1 + |f| otherwise, normalized to sum to one.
std::vector<double> abc_selection_probabilities(std::span<const double> fitnesses);

/// Splits n_streams streams across the sea and rivers (leader_fitnesses is
/// sorted best-first, sea at index 0) proportionally to each leader's margin
/// over the worst leader. Entries are non-negative and sum to n_streams.
std::vector<int> wca_stream_allocation(std::span<const double> leader_fitnesses, int n_streams);

/// IHS schedules over a budget of total_iterations: the pitch rate ramps
/// linearly from par_min (iteration 0) to par_max (last iteration) and the
/// bandwidth decays exponentially from bw_max to bw_min.
double ihs_pitch_rate(const IhsParams& p, int iteration, int total_iterations);
double ihs_bandwidth(const IhsParams& p, int iteration, int total_iterations);

/// Mutable per-run state a technique carries between iterations.
struct TechniqueState {
    // PSO family: inertia currently in effect (AIWPSO rewrites it each iteration).
    double inertia = 0.0;
    // FA: randomization weight with its per-iteration geometric decay.
    double fa_alpha = 0.0;
    double fa_decay = 1.0;
    // WCA: evaporation distance, shrinking linearly over the budget.
    double wca_dmax = 0.0;
    // MBO: formation order and iterations left until the next rotation.
    MboFormation formation;
    int rotation_countdown = 0;
    // PSFHS: m-by-n operation memory plus the adapted per-variable rates.
    std::vector<HsOperation> operation_memory;
    std::vector<double> hmcr;
    std::vector<double> par;
    int rehearsal = 0; ///< iterations run with the fixed 0.5/0.5 rates before adapting
};

/// Starting state for a validated, initialized space.
TechniqueState init_technique_state(const SearchSpace& s);

/// Everything a step reads and writes. The space's agents must be evaluated
/// and the global best up to date before a step runs.
struct StepContext {
    SearchSpace& space;
    Evaluator& eval;
    Rng& rng;
    TechniqueState& state;
    int iteration = 0; ///< 0-based index of the iteration being executed
};

// One step advances the population a single iteration per the technique's
// update rules, clamps every move into the bounds, and leaves the global
// best current. Parameter validation happens in check_search_space, never
// mid-run. The doc header of each implementation states its update
// equations and its fixed per-iteration evaluation count.
void pso_step(StepContext& ctx);
void aiwpso_step(StepContext& ctx);
void ba_step(StepContext& ctx);
void fpa_step(StepContext& ctx);
void fa_step(StepContext& ctx);
void cs_step(StepContext& ctx);
void bh_step(StepContext& ctx);
void mbo_step(StepContext& ctx);
void abc_step(StepContext& ctx);
void wca_step(StepContext& ctx);
void hs_step(StepContext& ctx);
void ihs_step(StepContext& ctx);
void psfhs_step(StepContext& ctx);

/// Dispatches on the space's technique.
void technique_step(Technique t, StepContext& ctx);

/// Exact number of objective evaluations one iteration performs:
///   PSO, AIWPSO, BA, FPA, FA    m
///   CS                          2m
///   BH, WCA                     m - 1
///   MBO                         k + (m - 1)(k - x)
///   ABC                         2m
///   HS, IHS, PSFHS              1
long long evaluations_per_iteration(const SearchSpace& s);

} // namespace metaopt

#endif
