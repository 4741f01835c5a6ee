#include "metaopt/rng.hpp"

#include <cmath>
#include <numbers>

namespace metaopt {

int Rng::uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = (UINT64_MAX / span) * span;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return static_cast<int>(lo + static_cast<std::int64_t>(x % span));
}

double Rng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_normal_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

double mantegna_step(double beta, Rng& rng) {
    const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
    const double den = std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
    const double sigma_u = std::pow(num / den, 1.0 / beta);
    const double u = rng.normal() * sigma_u;
    const double v = rng.normal();
    return u / std::pow(std::fabs(v), 1.0 / beta);
}

} // namespace metaopt
