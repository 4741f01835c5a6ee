#ifndef METAOPT_RNG_HPP
#define METAOPT_RNG_HPP

#include <cstdint>
#include <random>

namespace metaopt {

/// Random stream used for every stochastic draw in a run.
///
/// One seeded Rng is created per run and all randomness flows through it, so
/// equal seeds reproduce a run bit for bit. The engine is mt19937_64 and the
/// real-valued mappings below are fixed here rather than delegated to
/// std::*_distribution, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Raw 64-bit draw.
    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], inclusive, unbiased.
    int uniform_int(int lo, int hi);

    /// Standard normal via Box-Muller; the paired draw is cached.
    double normal();

private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

/// One heavy-tailed step from Mantegna's construction: u/|v|^(1/beta) with
/// u ~ N(0, sigma_u^2), v ~ N(0, 1) and
/// sigma_u = [Gamma(1+beta) sin(pi beta/2) / (Gamma((1+beta)/2) beta 2^((beta-1)/2))]^(1/beta).
/// The |step| tail decays like a power law with exponent beta.
double mantegna_step(double beta, Rng& rng);

} // namespace metaopt

#endif
