#pragma once

#include <optional>

#include "lifemoments/fractional_age.hpp"
#include "lifemoments/life_table.hpp"

namespace lifemoments {

/// How a MomentResult was produced.
enum class Method {
    ClosedForm, ///< constant-force closed-form summation
    Oracle,     ///< adaptive quadrature of the exact density
};

/// Insurance contract parameters shared by every moment operation.
struct ProductSpec {
    int x = 0;                 ///< issue age (years)
    int l = 0;                 ///< deferment in whole years, >= 0
    int n1 = 0;                ///< deferment sub-periods, 0 <= n1 < j
    std::optional<int> term;   ///< coverage term n in years; absent = whole life
    int m = 1;                 ///< moment order, 1 <= m <= max_moment_order
    double i = 0.0;            ///< annual effective interest rate, > -1
    int j = 1;                 ///< payment/measurement periods per year, >= 1
    bool force_terminal = false; ///< whole life on a table never reaching
                                 ///< zero survivors: treat the year after the
                                 ///< last tabulated age as certain death
};

/// A computed moment together with its provenance.
struct MomentResult {
    double value = 0.0;
    Method method = Method::ClosedForm;
    Assumption assumption = Assumption::ConstantForce;
    int horizon = 0;              ///< age at which summation/integration stopped
    int limit_branches_taken = 0; ///< count of degenerate-limit branch activations
};

// ============================================================================
// Constant-force closed forms.
//
// All operations below evaluate the m-th moment of a present-value random
// variable by summing one closed-form term per covered year, under the
// constant-force interpolation. Shared behavior:
//  - coverage: the table must cover ages x+l .. x+l+n (plus one more age
//    when n1 > 0); whole-life contracts sum until the survivor count
//    reaches zero, or to a forced terminal year (spec.force_terminal),
//    else raise InsufficientTable;
//  - summation: ascending years with compensated accumulation;
//  - degenerate years: a summand switches to its exact limit form when
//    p_{x+k} < 1e-300 (p -> 0 branches) or |log(nu^m p_{x+k})| < 1e-9
//    (nu^m p -> 1 branches); zero-mortality years contribute their exact
//    (often zero) limit. Activations are counted in
//    MomentResult::limit_branches_taken;
//  - errors: OutOfRange (bad spec fields or window not covered),
//    Overflow (m > max_moment_order), ZeroExposure (l_x = 0),
//    InsufficientTable (whole life without a terminal age).
// ============================================================================

/// m-th moment of nu^{T_x} restricted to death in [l, l+n):
/// an n-year insurance paying at the moment of death, deferred l years.
[[nodiscard]] MomentResult term_insurance_moment(const LifeTable& table,
                                                 const ProductSpec& spec);

/// m-th moment of T_x restricted to [l, l+n). Also accepts m = 0, where
/// the value is the interval death probability (l_{x+l} - l_{x+l+n})/l_x,
/// computed exactly in that form.
[[nodiscard]] MomentResult lifetime_moment(const LifeTable& table,
                                           const ProductSpec& spec);

/// Same quantity as lifetime_moment for m >= 1, evaluated through the
/// general-order kernel for every m (no dedicated low-order forms).
/// Exposed so the dedicated m = 1, 2 evaluations can be checked against
/// the general formula.
[[nodiscard]] MomentResult lifetime_moment_general(const LifeTable& table,
                                                   const ProductSpec& spec);

/// m-th moment of T_x nu^{T_x} restricted to [l, l+n): continuously
/// increasing insurance paid at the moment of death.
[[nodiscard]] MomentResult increasing_continuous_moment(const LifeTable& table,
                                                        const ProductSpec& spec);

/// m-th moment of ([T_x]+1) nu^{T_x} restricted to [l, l+n): benefit
/// grows by 1 at each policy anniversary.
[[nodiscard]] MomentResult increasing_annual_moment(const LifeTable& table,
                                                    const ProductSpec& spec);

/// m-th moment of (n+l-[T_x]) nu^{T_x} restricted to [l, l+n): benefit
/// shrinks by 1 at each anniversary. Requires a finite term.
[[nodiscard]] MomentResult decreasing_annual_moment(const LifeTable& table,
                                                    const ProductSpec& spec);

/// Probability that death occurs in the d-th sub-period of length 1/j
/// of the year starting at age x+k:
/// _kp_x * p_{x+k}^{d/j} * (1 - p_{x+k}^{1/j}),
/// evaluated as kpx * exp(-d lambda / j) * (-expm1(-lambda / j)) so the
/// sub-period probabilities telescope to _kp_x q_{x+k} at full precision.
/// Raises OutOfRange (d outside [0, j) or ages untabulated), ZeroExposure.
[[nodiscard]] double short_interval_prob(const LifeTable& table, int x, int k,
                                         int d, int j);

/// m-th moment of nu^{([j T_x]+1)/j} over the covered sub-periods:
/// insurance paying at the end of the 1/j-th period of death. With
/// n1 > 0 coverage is the union of the sub-periods d = n1..j-1 of each
/// year k = l..l+n-1 plus the sub-periods d = 0..n1-1 of year l+n.
[[nodiscard]] MomentResult mthly_insurance_moment(const LifeTable& table,
                                                  const ProductSpec& spec);

/// m-th moment of ([j T_x]+1) nu^{T_x} over the covered sub-periods:
/// benefit grows by 1 every 1/j-th of a year, paid at the moment of
/// death. Same coverage rule as mthly_insurance_moment.
[[nodiscard]] MomentResult mthly_increasing_moment(const LifeTable& table,
                                                   const ProductSpec& spec);

} // namespace lifemoments
