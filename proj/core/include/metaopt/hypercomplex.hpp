#ifndef METAOPT_HYPERCOMPLEX_HPP
#define METAOPT_HYPERCOMPLEX_HPP

#include <span>

#include "metaopt/run.hpp"
#include "metaopt/search_space.hpp"

namespace metaopt {

// Hypercomplex search replaces each decision variable with a row of k
// coefficients (k = 4 quaternions, k = 8 octonions, any k >= 1 accepted).
// The technique's own update rules run entry-wise on the coefficients over
// the box [0,1]^(n*k); objectives only ever see the spanned real position.
//
// The span map is this module's key assumption: a coefficient row q maps to
//
//   x_j = LB_j + (UB_j - LB_j) * ||q||_2 / sqrt(k)
//
// with every coefficient clamped into [0,1] first, so the spanned value is
// always inside [LB_j, UB_j]; the all-zero row spans to LB_j and the all-one
// row to UB_j.

/// Spans one coefficient row to a real value in [lb, ub].
double span_to_real(std::span<const double> coefficients, double lb, double ub);

/// Fills every agent's tensor with uniform [0,1] draws (n rows of k
/// coefficients), sets positions by spanning each row, evaluates the agents
/// and refreshes the global best (and best tensor). Throws on k < 1 or
/// unset bounds.
void init_tensor(SearchSpace& s, const ObjectiveFunction& f, int k, Rng& rng);

/// The techniques available in lifted form.
std::span<const Technique> lifting_roster();
bool supports_lifting(Technique t);

/// Runs the space's technique in hypercomplex form: the run happens over
/// coefficient space, and the result's best_position is the spanned real
/// vector with best_tensor holding the winning coefficients. The observer,
/// when given, sees the internal coefficient-space population (n*k variables
/// bounded by [0,1]). Throws for techniques outside the lifting roster and
/// for k < 1.
RunResult lift(const SearchSpace& proto, const ObjectiveFunction& f, int k, std::uint64_t seed,
               const IterationObserver& observer = {});

} // namespace metaopt

#endif
