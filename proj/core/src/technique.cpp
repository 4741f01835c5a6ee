#include "metaopt/technique.hpp"

#include <algorithm>
#include <cctype>

namespace metaopt {
namespace {

constexpr std::array<std::string_view, 13> kNames = {
    "pso", "aiwpso", "ba", "fpa", "fa", "cs", "bh", "mbo", "abc", "wca", "hs", "ihs", "psfhs",
};

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

void require(std::vector<std::string>& issues, bool ok, const std::string& message) {
    if (!ok) issues.push_back(message);
}

// Probability-typed parameters live strictly inside (0, 1); degenerate 0/1
// settings are still reachable programmatically for endpoint experiments but
// are rejected when validating a configured space.
bool open01(double v) { return v > 0.0 && v < 1.0; }

} // namespace

std::string_view technique_name(Technique t) { return kNames[static_cast<std::size_t>(t)]; }

std::optional<Technique> technique_from_name(std::string_view name) {
    const std::string lowered = to_lower(name);
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (lowered == kNames[i]) return static_cast<Technique>(i);
    }
    return std::nullopt;
}

TechniqueParams default_params(Technique t) {
    switch (t) {
    case Technique::PSO: return PsoParams{};
    case Technique::AIWPSO: return AiwpsoParams{};
    case Technique::BA: return BaParams{};
    case Technique::FPA: return FpaParams{};
    case Technique::FA: return FaParams{};
    case Technique::CS: return CsParams{};
    case Technique::BH: return BhParams{};
    case Technique::MBO: return MboParams{};
    case Technique::ABC: return AbcParams{};
    case Technique::WCA: return WcaParams{};
    case Technique::HS: return HsParams{};
    case Technique::IHS: return IhsParams{};
    case Technique::PSFHS: return PsfhsParams{};
    }
    return PsoParams{};
}

Technique technique_of(const TechniqueParams& params) {
    return static_cast<Technique>(params.index());
}

std::vector<std::string> parameter_issues(const TechniqueParams& params, int m) {
    std::vector<std::string> issues;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PsoParams>) {
                require(issues, p.c1 > 0.0, "pso: c1 must be > 0");
                require(issues, p.c2 > 0.0, "pso: c2 must be > 0");
                require(issues, p.w >= 0.0, "pso: w must be >= 0");
                require(issues, p.w_min <= p.w_max, "pso: w_min must be <= w_max");
            } else if constexpr (std::is_same_v<T, AiwpsoParams>) {
                require(issues, p.c1 > 0.0, "aiwpso: c1 must be > 0");
                require(issues, p.c2 > 0.0, "aiwpso: c2 must be > 0");
                require(issues, p.w >= 0.0, "aiwpso: w must be >= 0");
                require(issues, p.w_min >= 0.0, "aiwpso: w_min must be >= 0");
                require(issues, p.w_min < p.w_max, "aiwpso: w_min must be < w_max");
            } else if constexpr (std::is_same_v<T, BaParams>) {
                require(issues, p.f_min >= 0.0, "ba: f_min must be >= 0");
                require(issues, p.f_min <= p.f_max, "ba: f_min must be <= f_max");
                require(issues, p.loudness > 0.0, "ba: loudness must be > 0");
                require(issues, p.pulse_rate >= 0.0 && p.pulse_rate <= 1.0,
                        "ba: pulse_rate must be in [0, 1]");
                require(issues, p.alpha > 0.0 && p.alpha <= 1.0, "ba: alpha must be in (0, 1]");
                require(issues, p.gamma > 0.0, "ba: gamma must be > 0");
            } else if constexpr (std::is_same_v<T, FpaParams>) {
                require(issues, open01(p.p), "fpa: p must be in (0, 1)");
                require(issues, p.beta > 0.0 && p.beta <= 2.0, "fpa: beta must be in (0, 2]");
            } else if constexpr (std::is_same_v<T, FaParams>) {
                require(issues, p.alpha >= 0.0, "fa: alpha must be >= 0");
                require(issues, p.beta0 > 0.0, "fa: beta0 must be > 0");
                require(issues, p.gamma > 0.0, "fa: gamma must be > 0");
            } else if constexpr (std::is_same_v<T, CsParams>) {
                require(issues, open01(p.pa), "cs: pa must be in (0, 1)");
                require(issues, p.alpha > 0.0, "cs: alpha must be > 0");
                require(issues, p.beta > 0.0 && p.beta <= 2.0, "cs: beta must be in (0, 2]");
            } else if constexpr (std::is_same_v<T, MboParams>) {
                require(issues, p.shared >= 1, "mbo: shared must be >= 1");
                require(issues, p.neighbors >= 2 * p.shared + 1,
                        "mbo: neighbors must be >= 2*shared + 1");
                require(issues, p.leader_period >= 1, "mbo: leader_period must be >= 1");
            } else if constexpr (std::is_same_v<T, AbcParams>) {
                require(issues, p.limit >= 1, "abc: limit must be >= 1");
            } else if constexpr (std::is_same_v<T, WcaParams>) {
                require(issues, p.n_sr >= 1, "wca: n_sr must be >= 1");
                require(issues, p.n_sr < m, "wca: n_sr must be < population size");
                require(issues, p.d_max >= 0.0, "wca: d_max must be >= 0");
            } else if constexpr (std::is_same_v<T, HsParams>) {
                require(issues, open01(p.hmcr), "hs: hmcr must be in (0, 1)");
                require(issues, open01(p.par), "hs: par must be in (0, 1)");
                require(issues, p.bandwidth > 0.0, "hs: bandwidth must be > 0");
            } else if constexpr (std::is_same_v<T, IhsParams>) {
                require(issues, open01(p.hmcr), "ihs: hmcr must be in (0, 1)");
                require(issues, open01(p.par_min), "ihs: par_min must be in (0, 1)");
                require(issues, open01(p.par_max), "ihs: par_max must be in (0, 1)");
                require(issues, p.par_min <= p.par_max, "ihs: par_min must be <= par_max");
                require(issues, p.bw_min > 0.0, "ihs: bw_min must be > 0");
                require(issues, p.bw_min <= p.bw_max, "ihs: bw_min must be <= bw_max");
            } else {
                // BhParams, PsfhsParams: nothing to validate.
                (void)p;
            }
        },
        params);
    return issues;
}

} // namespace metaopt
