#pragma once

#include <functional>

#include "lifemoments/fractional_age.hpp"
#include "lifemoments/life_table.hpp"

namespace lifemoments {

/// Declared monotone direction of a payoff across the integration window,
/// used by the expectation-ordering harness.
enum class YearMonotonicity {
    NonIncreasing,
    NonDecreasing,
    Mixed,
};

/// A payoff function g(t) of the remaining lifetime.
struct Payoff {
    std::function<double(double)> evaluator;
    YearMonotonicity year_monotonicity = YearMonotonicity::Mixed;
};

/// Tuning knobs for the adaptive quadrature.
struct QuadratureOptions {
    /// Target absolute error per integrated year.
    double abs_tol = 1e-12;
    /// Relative floor: a year is also accepted once its error estimate
    /// drops below rel_tol times the year's integral magnitude. Keeps
    /// large-magnitude moments (e.g. high-order mthly products) from
    /// exhausting the budget chasing an absolute target below rounding.
    double rel_tol = 1e-13;
    /// Subdivision budget per integrated year.
    int max_panels_per_year = 2000;
};

/// E[g(T_x); l_start <= T_x < l_end] by adaptive Gauss-Kronrod (G7,K15)
/// quadrature of g(t) * f_x(t), where f_x is the exact conditional
/// density of the selected fractional-age assumption. Panels never cross
/// an integer age (densities are discontinuous at knots); each year is
/// integrated to the configured tolerance. Years past the terminal age
/// are dropped; years whose total probability mass cannot influence the
/// result at the working tolerance are skipped.
///
/// Raises OutOfRange (window outside table coverage), ZeroExposure,
/// BalducciDegenerate / DegenerateYear (propagated from the density on
/// years with q = 1 under Balducci resp. p = 0 under constant force),
/// NonConvergent (error target not met within the subdivision budget).
[[nodiscard]] double expectation(const LifeTable& table, Assumption assumption,
                                 int x, const Payoff& payoff, double l_start,
                                 double l_end, const QuadratureOptions& options);

/// Convenience overload: default options with abs_tol = tol.
[[nodiscard]] double expectation(const LifeTable& table, Assumption assumption,
                                 int x, const Payoff& payoff, double l_start,
                                 double l_end, double tol = 1e-12);

/// Result of comparing the three interpolation assumptions on one payoff.
struct OrderingReport {
    double udd = 0.0;
    double constant_force = 0.0;
    double balducci = 0.0;
    bool holds = false;            ///< declared ordering satisfied within tolerance
    YearMonotonicity declared = YearMonotonicity::Mixed;
    double tolerance = 0.0;        ///< slack used in the comparisons
};

/// Computes E[g(T_x); l <= T_x < l+n] under all three assumptions and
/// reports whether the expectation ordering implied by the declared
/// monotone direction holds within 10x the quadrature tolerance:
/// non-increasing payoffs order UDD <= constant force <= Balducci,
/// non-decreasing payoffs order UDD >= constant force >= Balducci.
/// Raises MixedMonotonicity when the payoff declares no direction.
[[nodiscard]] OrderingReport ordering_check(const LifeTable& table, int x,
                                            const Payoff& payoff, int l, int n,
                                            const QuadratureOptions& options = {});

/// Adaptive quadrature of t^(a-1) e^(-t) over [x_lo, x_lo + 200], the
/// integral defining the upper incomplete gamma function (the remaining
/// tail is below any supported tolerance). Used to cross-check
/// upper_gamma_int. Raises OutOfRange (a < 1), NonConvergent.
[[nodiscard]] double gamma_integrand_check(int a, double x_lo);

/// General-purpose adaptive Gauss-Kronrod integration of f over [a, b]
/// to the given absolute/relative tolerance. Exposed for tests.
[[nodiscard]] double integrate_adaptive(const std::function<double(double)>& f,
                                        double a, double b, double abs_tol,
                                        double rel_tol, int max_panels);

} // namespace lifemoments
