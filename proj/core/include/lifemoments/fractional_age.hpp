#pragma once

#include <string_view>

#include "lifemoments/life_table.hpp"

namespace lifemoments {

/// The rule interpolating survival between integer ages.
enum class Assumption {
    UDD,           ///< uniform distribution of deaths: linear in l
    ConstantForce, ///< constant force of mortality: geometric in l
    Balducci,      ///< Balducci: harmonic (linear in 1/l)
};

[[nodiscard]] std::string_view to_string(Assumption assumption) noexcept;

/// Survival probability over a fractional horizon: _u p_x for real u >= 0.
/// At integer u all three assumptions return l_{x+u} / l_x; between
/// knots the value follows the selected interpolation of l.
///
/// Raises OutOfRange (x or x+u untabulated, or u < 0), ZeroExposure
/// (l_x = 0), BalducciDegenerate (fractional u inside a year whose
/// one-year death probability is 1). Years past the terminal age
/// contribute probability 0.
[[nodiscard]] double survival_fraction(const LifeTable& table, Assumption assumption,
                                       int x, double u);

/// Conditional density of the remaining lifetime of a life aged x,
/// evaluated at t years. Densities are piecewise on year intervals and
/// discontinuous at knots; at integer t the right limit (the density of
/// the year starting at t) is returned.
///
/// Raises OutOfRange, ZeroExposure, BalducciDegenerate (year with q = 1),
/// DegenerateYear (constant force on a year with p = 0, where the
/// density is not a finite function). Years past the terminal age return 0.
[[nodiscard]] double density(const LifeTable& table, Assumption assumption,
                             int x, double t);

/// The constant force of mortality on a single year: -log(p), evaluated
/// without cancellation when p is near 1 (via -log1p(-q)). Requires the
/// exact complement pair q = 1 - p.
[[nodiscard]] double constant_force_lambda(double p, double q) noexcept;

} // namespace lifemoments
