#pragma once

#include "lifemoments/errors.hpp"

namespace lifemoments {

/// Largest supported moment order. Keeps every factorial and binomial
/// coefficient exactly representable and keeps discount powers within
/// double range for realistic tables.
inline constexpr int max_moment_order = 20;

/// n! for 0 <= n <= max_moment_order + 1; raises Overflow beyond.
[[nodiscard]] double factorial(int n);

/// Upper incomplete gamma function for positive integer order:
/// Gamma(a, x) = integral over [x, inf) of t^(a-1) e^(-t) dt
///             = (a-1)! e^(-x) * sum_{k=0}^{a-1} x^k / k!.
/// The finite sum has only positive terms, so the evaluation is exact up
/// to rounding. Requires a >= 1 and finite x >= 0; raises Overflow when
/// (a-1)! is outside the supported factorial range, OutOfRange otherwise.
[[nodiscard]] double upper_gamma_int(int a, double x);

/// I_r(h) = integral over [0,1] of u^r e^(-h u) du, for 0 <= r <=
/// max_moment_order + 1 and any finite h. Every evaluation path sums
/// positive terms only, so there is no cancellation for any sign or
/// magnitude of h:
///  - h = 0:        1 / (r + 1) exactly,
///  - h < 0:        ascending series sum_s (-h)^s / (s! (r+s+1)),
///  - 0 < h <= 500: e^(-h) * sum_t h^t / ((r+1)(r+2)...(r+1+t)),
///  - h > 500:      r! / h^(r+1); the neglected tail is below 1e-140
///                  relative.
[[nodiscard]] double exp_moment_integral(int r, double h);

/// integral over [0,1] of (k + u)^m e^(-h u) du, expanded as
/// sum_r C(m,r) k^(m-r) I_r(h) with k >= 0, so all terms are positive.
/// Equals e^(k h) (Gamma(m+1, k h) - Gamma(m+1, (k+1) h)) / h^(m+1) for
/// h != 0 and reproduces the h -> 0 limit
/// ((k+1)^(m+1) - k^(m+1)) / (m+1) automatically.
/// Requires 0 <= m <= max_moment_order, k >= 0; raises OutOfRange /
/// Overflow on violations.
[[nodiscard]] double poly_exp_year_integral(int m, double k, double h);

} // namespace lifemoments
