#pragma once

#include "lifemoments/life_table.hpp"
#include "lifemoments/oracle.hpp"

namespace lifemoments {

/// Parameters of the Gompertz survival law
/// s(u) = exp(-(beta/alpha) (e^(alpha u) - 1)).
struct GompertzParams {
    double alpha; ///< shape, per year, > 0
    double beta;  ///< level, per year, > 0
};

/// Survival probability s(u) for u >= 0; s(0) = 1. Raises OutOfRange on
/// invalid parameters or u < 0.
[[nodiscard]] double survival(const GompertzParams& params, double u);

/// k-year survival probability for a life aged x:
/// exp(-(beta/alpha) e^(alpha x) (e^(alpha k) - 1)), which equals
/// survival(x+k) / survival(x).
[[nodiscard]] double k_year_p(const GompertzParams& params, int x, int k);

/// Force of mortality beta e^(alpha u).
[[nodiscard]] double force(const GompertzParams& params, double u);

/// Lifetime density f_0(u) = force(u) * survival(u); integrates to 1
/// over [0, inf).
[[nodiscard]] double density(const GompertzParams& params, double u);

/// Discrete life table with l_x = radix * survival(x) for
/// x = 0 .. max_age. Raises OutOfRange (max_age < 1 or radix <= 0).
[[nodiscard]] LifeTable discretize(const GompertzParams& params, int max_age,
                                   double radix);

/// E[g(T_0); l_start <= T_0 < l_end] under the continuous Gompertz law
/// itself (no interpolation), by adaptive quadrature of g(u) f_0(u).
/// l_end may be infinite: the integral is truncated at the age where
/// survival drops below 1e-16 * tol, which bounds the neglected tail.
/// Raises OutOfRange, NonConvergent.
[[nodiscard]] double exact_expectation(const GompertzParams& params,
                                       const Payoff& payoff, double l_start,
                                       double l_end, double tol = 1e-12);

} // namespace lifemoments
