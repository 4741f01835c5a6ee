#ifndef METAOPT_TECHNIQUE_HPP
#define METAOPT_TECHNIQUE_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace metaopt {

/// The thirteen techniques shipped with the library.
enum class Technique {
    PSO,    ///< particle swarm optimization
    AIWPSO, ///< PSO with adaptive inertia weight
    BA,     ///< bat algorithm
    FPA,    ///< flower pollination algorithm
    FA,     ///< firefly algorithm
    CS,     ///< cuckoo search
    BH,     ///< black hole algorithm
    MBO,    ///< migrating birds optimization
    ABC,    ///< artificial bee colony
    WCA,    ///< water cycle algorithm
    HS,     ///< harmony search
    IHS,    ///< improved harmony search
    PSFHS,  ///< parameter-setting-free harmony search
};

inline constexpr std::array<Technique, 13> kAllTechniques = {
    Technique::PSO, Technique::AIWPSO, Technique::BA,  Technique::FPA, Technique::FA,
    Technique::CS,  Technique::BH,     Technique::MBO, Technique::ABC, Technique::WCA,
    Technique::HS,  Technique::IHS,    Technique::PSFHS,
};

/// Lower-case identifier ("pso", "aiwpso", ...), stable across releases.
std::string_view technique_name(Technique t);

/// Case-insensitive reverse lookup; nullopt for unknown names.
std::optional<Technique> technique_from_name(std::string_view name);

// Per-technique parameters. Defaults are the widely used settings from each
// technique's original formulation; the documented valid ranges are enforced
// by parameter_issues() below.

struct PsoParams {
    double c1 = 1.7;    ///< cognitive acceleration
    double c2 = 1.7;    ///< social acceleration
    double w = 0.7;     ///< inertia weight (initial value for AIWPSO)
    double w_min = 0.0; ///< ignored by plain PSO
    double w_max = 0.0; ///< ignored by plain PSO
    bool operator==(const PsoParams&) const = default;
};

/// AIWPSO shares the PSO parameter set but requires w_min < w_max; the
/// inertia weight is re-derived from the population success rate each
/// iteration and stays inside [w_min, w_max].
struct AiwpsoParams {
    double c1 = 1.7;
    double c2 = 1.7;
    double w = 0.7; ///< inertia used on the first iteration
    double w_min = 0.0;
    double w_max = 1.0;
    bool operator==(const AiwpsoParams&) const = default;
};

struct BaParams {
    double f_min = 0.0;     ///< lowest pulse frequency
    double f_max = 2.0;     ///< highest pulse frequency
    double loudness = 1.0;  ///< initial loudness A0
    double pulse_rate = 0.5; ///< asymptotic pulse emission rate r0
    double alpha = 0.9;     ///< loudness decay, A <- alpha * A on acceptance
    double gamma = 0.9;     ///< pulse-rate ramp, r(t) = r0 (1 - e^(-gamma t))
    bool operator==(const BaParams&) const = default;
};

struct FpaParams {
    double p = 0.8;    ///< probability of a global (Levy) move
    double beta = 1.5; ///< Levy tail exponent
    bool operator==(const FpaParams&) const = default;
};

struct FaParams {
    double alpha = 0.2; ///< randomization weight, scaled by the variable range
    double beta0 = 1.0; ///< attractiveness at distance zero
    double gamma = 1.0; ///< light absorption coefficient
    bool operator==(const FaParams&) const = default;
};

struct CsParams {
    double pa = 0.25;  ///< abandonment probability per non-elite nest
    double alpha = 1.0; ///< Levy step scale (order-one steps relative to the best)
    double beta = 1.5; ///< Levy tail exponent
    bool operator==(const CsParams&) const = default;
};

struct BhParams {
    bool operator==(const BhParams&) const = default;
};

struct MboParams {
    int neighbors = 3;     ///< k, candidates generated by the leader
    int shared = 1;        ///< x, candidates handed down the formation per side
    int leader_period = 10; ///< iterations between leader rotations
    bool operator==(const MboParams&) const = default;
};

struct AbcParams {
    int limit = 50; ///< trial-counter threshold before a source is abandoned
    bool operator==(const AbcParams&) const = default;
};

struct WcaParams {
    int n_sr = 4;       ///< number of rivers plus the sea
    double d_max = 0.1; ///< evaporation distance between a river and the sea
    bool operator==(const WcaParams&) const = default;
};

struct HsParams {
    double hmcr = 0.9;      ///< harmony-memory considering rate
    double par = 0.3;       ///< pitch adjusting rate
    double bandwidth = 0.1; ///< pitch adjustment half-width (absolute)
    bool operator==(const HsParams&) const = default;
};

struct IhsParams {
    double hmcr = 0.9;
    double par_min = 0.1;  ///< PAR at the first iteration
    double par_max = 0.99; ///< PAR at the last iteration
    double bw_min = 1e-4;  ///< bandwidth at the last iteration
    double bw_max = 1.0;   ///< bandwidth at the first iteration
    bool operator==(const IhsParams&) const = default;
};

/// No tunables: rates are learned per variable from the operation memory.
struct PsfhsParams {
    bool operator==(const PsfhsParams&) const = default;
};

/// Variant order matches the Technique enumeration.
using TechniqueParams =
    std::variant<PsoParams, AiwpsoParams, BaParams, FpaParams, FaParams, CsParams, BhParams,
                 MboParams, AbcParams, WcaParams, HsParams, IhsParams, PsfhsParams>;

/// Canonical default parameters for a technique.
TechniqueParams default_params(Technique t);

/// Technique a parameter pack belongs to (variant index).
Technique technique_of(const TechniqueParams& params);

/// Validates a parameter pack against its documented ranges. `m` is the
/// population size (WCA's n_sr must stay below it). Returns one message per
/// violated constraint; empty means valid.
std::vector<std::string> parameter_issues(const TechniqueParams& params, int m);

} // namespace metaopt

#endif
