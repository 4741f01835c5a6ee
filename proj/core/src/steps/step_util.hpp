#ifndef METAOPT_STEP_UTIL_HPP
#define METAOPT_STEP_UTIL_HPP

#include <cmath>
#include <cstddef>
#include <span>

#include "metaopt/search_space.hpp"

namespace metaopt::detail {

inline void uniform_reinit(Agent& a, const SearchSpace& s, Rng& rng) {
    for (int j = 0; j < s.n; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        a.x[ju] = rng.uniform(s.lower[ju], s.upper[ju]);
    }
    clamp_to_bounds(a, s);
}

inline double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace metaopt::detail

#endif
