#pragma once

#include "lifemoments/closed_form.hpp"
#include "lifemoments/gompertz.hpp"
#include "lifemoments/oracle.hpp"

namespace lifemoments {

/// The insurance products with closed constant-force forms.
enum class ProductKind {
    TermInsurance,        ///< nu^{T_x}
    Lifetime,             ///< T_x^m (no discounting)
    IncreasingContinuous, ///< T_x nu^{T_x}
    IncreasingAnnual,     ///< ([T_x]+1) nu^{T_x}
    DecreasingAnnual,     ///< (n+l-[T_x]) nu^{T_x}
    MthlyInsurance,       ///< nu^{([j T_x]+1)/j}
    MthlyIncreasing,      ///< ([j T_x]+1) nu^{T_x}
};

[[nodiscard]] std::string_view to_string(ProductKind kind) noexcept;

/// Dispatch to the constant-force closed form for `kind`.
[[nodiscard]] MomentResult closed_form_moment(const LifeTable& table,
                                              ProductKind kind,
                                              const ProductSpec& spec);

/// The payoff g(t) whose m-th power's expectation the product computes,
/// with its monotone direction declared where one exists.
[[nodiscard]] Payoff product_payoff(ProductKind kind, const ProductSpec& spec);

/// The same moment as closed_form_moment, computed by quadrature of the
/// exact density under any of the three assumptions. Coverage windows
/// (deferment, sub-period unions for the mthly products) match the
/// closed forms; integration pieces are additionally clipped at the
/// payoff's sub-period jumps.
[[nodiscard]] MomentResult oracle_product_moment(const LifeTable& table,
                                                 Assumption assumption,
                                                 ProductKind kind,
                                                 const ProductSpec& spec,
                                                 const QuadratureOptions& options = {});

/// The same moment under the continuous Gompertz law itself (no
/// interpolation), integrating the exact parametric density. Whole-life
/// contracts truncate where the surviving mass is negligible.
[[nodiscard]] MomentResult gompertz_product_moment(const GompertzParams& params,
                                                   ProductKind kind,
                                                   const ProductSpec& spec,
                                                   double tol = 1e-12);

} // namespace lifemoments
