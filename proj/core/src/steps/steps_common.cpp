#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "metaopt/error.hpp"
#include "metaopt/steps.hpp"

namespace metaopt {

void mbo_rotate(MboFormation& formation) {
    std::vector<int>& line = formation.rotate_left_next ? formation.left : formation.right;
    formation.rotate_left_next = !formation.rotate_left_next;
    if (line.empty()) return;
    const int old_leader = formation.leader;
    formation.leader = line.front();
    line.erase(line.begin());
    line.push_back(old_leader);
}

PsfhsRates psfhs_rates(const std::vector<HsOperation>& operation_memory, int m, int n) {
    PsfhsRates rates;
    rates.hmcr.assign(static_cast<std::size_t>(n), 0.0);
    rates.par.assign(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        int memory = 0, pitch = 0;
        for (int i = 0; i < m; ++i) {
            const HsOperation op = operation_memory[static_cast<std::size_t>(i) * n + j];
            if (op == HsOperation::Memory) ++memory;
            if (op == HsOperation::Pitch) ++pitch;
        }
        const int considered = memory + pitch;
        rates.hmcr[static_cast<std::size_t>(j)] = static_cast<double>(considered) / m;
        // The pitch rate is floored at 1/m: once every slot of a column was
        // produced by plain memory consideration the pitch count would stay
        // zero forever, freezing the search.
        const double pitch_rate = considered > 0 ? static_cast<double>(pitch) / considered : 0.0;
        rates.par[static_cast<std::size_t>(j)] = std::max(pitch_rate, 1.0 / m);
    }
    return rates;
}

std::vector<double> abc_selection_probabilities(std::span<const double> fitnesses) {
    std::vector<double> quality(fitnesses.size());
    for (std::size_t i = 0; i < fitnesses.size(); ++i) {
        const double f = fitnesses[i];
        quality[i] = f >= 0.0 ? 1.0 / (1.0 + f) : 1.0 + std::fabs(f);
    }
    const double total = std::accumulate(quality.begin(), quality.end(), 0.0);
    for (double& q : quality) q /= total;
    return quality;
}

std::vector<int> wca_stream_allocation(std::span<const double> leader_fitnesses, int n_streams) {
    const std::size_t count = leader_fitnesses.size();
    std::vector<int> streams(count, 0);
    if (count == 0 || n_streams <= 0) return streams;

    const double worst = leader_fitnesses[count - 1];
    std::vector<double> margin(count);
    double total = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        margin[i] = std::fabs(leader_fitnesses[i] - worst);
        total += margin[i];
    }

    int assigned = 0;
    if (total > 0.0) {
        for (std::size_t i = 0; i < count; ++i) {
            streams[i] = static_cast<int>(std::round(margin[i] / total * n_streams));
            assigned += streams[i];
        }
    }
    // Distribute the rounding slack (or everything, when all leaders tie)
    // best-first so the sea keeps the largest share.
    std::size_t i = 0;
    while (assigned < n_streams) {
        ++streams[i];
        ++assigned;
        i = (i + 1) % count;
    }
    i = 0;
    while (assigned > n_streams) {
        if (streams[count - 1 - i] > 0) {
            --streams[count - 1 - i];
            --assigned;
        }
        i = (i + 1) % count;
    }
    return streams;
}

TechniqueState init_technique_state(const SearchSpace& s) {
    TechniqueState state;
    switch (s.technique) {
    case Technique::PSO:
        state.inertia = std::get<PsoParams>(s.params).w;
        break;
    case Technique::AIWPSO:
        state.inertia = std::get<AiwpsoParams>(s.params).w;
        break;
    case Technique::FA: {
        const auto& p = std::get<FaParams>(s.params);
        state.fa_alpha = p.alpha;
        // Geometric schedule shrinking the randomization to ~1e-4 of its
        // starting weight by the end of the budget.
        state.fa_decay =
            s.iterations > 0 ? std::pow(1e-4 / 0.9, 1.0 / s.iterations) : 1.0;
        break;
    }
    case Technique::WCA:
        state.wca_dmax = std::get<WcaParams>(s.params).d_max;
        break;
    case Technique::MBO: {
        const auto& p = std::get<MboParams>(s.params);
        state.formation.leader = 0;
        for (int i = 1; i < s.m; ++i) {
            if (i % 2 == 1)
                state.formation.left.push_back(i);
            else
                state.formation.right.push_back(i);
        }
        state.rotation_countdown = p.leader_period;
        break;
    }
    case Technique::PSFHS:
        state.operation_memory.assign(static_cast<std::size_t>(s.m) * s.n, HsOperation::Random);
        state.hmcr.assign(static_cast<std::size_t>(s.n), 0.5);
        state.par.assign(static_cast<std::size_t>(s.n), 0.5);
        state.rehearsal = s.m;
        break;
    default:
        break;
    }
    return state;
}

void technique_step(Technique t, StepContext& ctx) {
    switch (t) {
    case Technique::PSO: pso_step(ctx); return;
    case Technique::AIWPSO: aiwpso_step(ctx); return;
    case Technique::BA: ba_step(ctx); return;
    case Technique::FPA: fpa_step(ctx); return;
    case Technique::FA: fa_step(ctx); return;
    case Technique::CS: cs_step(ctx); return;
    case Technique::BH: bh_step(ctx); return;
    case Technique::MBO: mbo_step(ctx); return;
    case Technique::ABC: abc_step(ctx); return;
    case Technique::WCA: wca_step(ctx); return;
    case Technique::HS: hs_step(ctx); return;
    case Technique::IHS: ihs_step(ctx); return;
    case Technique::PSFHS: psfhs_step(ctx); return;
    }
    throw Error("unknown technique");
}

long long evaluations_per_iteration(const SearchSpace& s) {
    const long long m = s.m;
    switch (s.technique) {
    case Technique::PSO:
    case Technique::AIWPSO:
    case Technique::BA:
    case Technique::FPA:
    case Technique::FA:
        return m;
    case Technique::CS:
    case Technique::ABC:
        return 2 * m;
    case Technique::BH:
    case Technique::WCA:
        return m - 1;
    case Technique::MBO: {
        const auto& p = std::get<MboParams>(s.params);
        return p.neighbors + (m - 1) * (p.neighbors - p.shared);
    }
    case Technique::HS:
    case Technique::IHS:
    case Technique::PSFHS:
        return 1;
    }
    return 0;
}

} // namespace metaopt
