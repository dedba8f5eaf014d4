#include "lifemoments/closed_form.hpp"

#include <cmath>
#include <string>

#include "lifemoments/special_fn.hpp"
#include "compensated_sum.hpp"
#include "contract_window.hpp"

namespace lifemoments {

namespace {

using detail::CompensatedSum;
using detail::WindowPlan;
using detail::plan_window;
using detail::validate_spec;
using detail::year_bundle;

/// Trigger for the p -> 0 limit branches: below this the direct formulas
/// mix infinities (log p) with vanishing factors.
constexpr double p_zero_threshold = 1e-300;

/// Trigger for the nu^m p -> 1 limit branches: below this magnitude of
/// log(nu^m p) the direct quotients lose more than 7 digits to
/// cancellation, while the limit expansions are accurate.
constexpr double log_one_threshold = 1e-9;

/// q/lambda - p, the first-order year integral of the constant-force
/// density against (t - k). Evaluated by its ascending series for small
/// lambda, where the direct quotient cancels.
double psi_stable(double p, double q, double lambda) {
    if (lambda >= 0.5) {
        return q / lambda - p;
    }
    double term = lambda * 0.5;
    double sum = term;
    for (int s = 2; s <= 80; ++s) {
        term *= -lambda * static_cast<double>(s) /
                (static_cast<double>(s + 1) * static_cast<double>(s - 1));
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-18) {
            break;
        }
    }
    return sum;
}

/// (e^L - 1)/L with its L -> 0 limit expansion.
double expm1_over(double L, int& branches) {
    if (std::abs(L) < log_one_threshold) {
        ++branches;
        return 1.0 + 0.5 * L;
    }
    return std::expm1(L) / L;
}

double int_pow(double base, int exponent) {
    return std::pow(base, static_cast<double>(exponent));
}

MomentResult make_result(const LifeTable&, const ProductSpec& spec,
                         const WindowPlan& plan, double value, int branches) {
    MomentResult result{};
    result.value = value;
    result.method = Method::ClosedForm;
    result.assumption = Assumption::ConstantForce;
    result.horizon = spec.x + plan.k_end;
    result.limit_branches_taken = branches;
    return result;
}

} // namespace

// ============================================================================
// Moments of nu^{T_x} and its annually weighted relatives. Each year
// contributes kpx * lambda * integral over the year of the payoff times
// e^{-lambda (t-k)}; the integral collapses to (e^L - 1)/L with
// L = log(nu^m p) for payoffs constant in t within the year up to the
// discount factor.
// ============================================================================

MomentResult term_insurance_moment(const LifeTable& table, const ProductSpec& spec) {
    validate_spec(spec, false);
    const WindowPlan plan = plan_window(table, spec, false);
    const double D = spec.m * std::log1p(spec.i);

    CompensatedSum sum;
    int branches = 0;
    for (int k = plan.k_begin; k < plan.k_end; ++k) {
        const ProbabilityBundle b = year_bundle(table, spec, plan, k);
        if (b.kpx == 0.0) {
            break; // terminal age reached; no mass remains
        }
        const double discount = std::exp(-D * k);
        if (b.p < p_zero_threshold) {
            ++branches;
            sum.add(discount * b.kpx);
            continue;
        }
        const double lambda = constant_force_lambda(b.p, b.q);
        const double L = -(D + lambda);
        sum.add(discount * b.kpx * lambda * expm1_over(L, branches));
    }
    return make_result(table, spec, plan, sum.value(), branches);
}

MomentResult increasing_annual_moment(const LifeTable& table,
                                      const ProductSpec& spec) {
    validate_spec(spec, false);
    const WindowPlan plan = plan_window(table, spec, false);
    const double D = spec.m * std::log1p(spec.i);

    CompensatedSum sum;
    int branches = 0;
    for (int k = plan.k_begin; k < plan.k_end; ++k) {
        const ProbabilityBundle b = year_bundle(table, spec, plan, k);
        if (b.kpx == 0.0) {
            break;
        }
        const double weight = std::exp(-D * k) * int_pow(k + 1.0, spec.m) * b.kpx;
        if (b.p < p_zero_threshold) {
            ++branches;
            sum.add(weight);
            continue;
        }
        const double lambda = constant_force_lambda(b.p, b.q);
        const double L = -(D + lambda);
        sum.add(weight * lambda * expm1_over(L, branches));
    }
    return make_result(table, spec, plan, sum.value(), branches);
}

MomentResult decreasing_annual_moment(const LifeTable& table,
                                      const ProductSpec& spec) {
    validate_spec(spec, false);
    if (!spec.term) {
        throw OutOfRange("a decreasing benefit requires a finite term");
    }
    const WindowPlan plan = plan_window(table, spec, false);
    const double D = spec.m * std::log1p(spec.i);

    CompensatedSum sum;
    int branches = 0;
    for (int k = plan.k_begin; k < plan.k_end; ++k) {
        const ProbabilityBundle b = year_bundle(table, spec, plan, k);
        if (b.kpx == 0.0) {
            break;
        }
        const double weight = std::exp(-D * k) *
                              int_pow(static_cast<double>(plan.k_end - k), spec.m) *
                              b.kpx;
        if (b.p < p_zero_threshold) {
            ++branches;
            sum.add(weight);
            continue;
        }
        const double lambda = constant_force_lambda(b.p, b.q);
        const double L = -(D + lambda);
        sum.add(weight * lambda * expm1_over(L, branches));
    }
    return make_result(table, spec, plan, sum.value(), branches);
}

// ============================================================================
// Moments of T_x: per-year integrals of (k+u)^m against the exponential
// year density. The dedicated m = 1, 2 evaluations regroup the general
// kernel so every term stays positive.
// ============================================================================

namespace {

MomentResult lifetime_moment_impl(const LifeTable& table, const ProductSpec& spec,
                                  bool use_dedicated_low_orders) {
    validate_spec(spec, use_dedicated_low_orders);
    const WindowPlan plan = plan_window(table, spec, false);

    if (spec.m == 0) {
        // Interval death probability, computed in the exact two-term form.
        const double l_begin = table.survivors_at(spec.x + plan.k_begin);
        const double l_end = plan.virtual_terminal
                                 ? 0.0
                                 : table.survivors_at(spec.x + plan.k_end);
        const double value = (l_begin - l_end) / table.survivors_at(spec.x);
        return make_result(table, spec, plan, value, 0);
    }

    CompensatedSum sum;
    int branches = 0;
    for (int k = plan.k_begin; k < plan.k_end; ++k) {
        const ProbabilityBundle b = year_bundle(table, spec, plan, k);
        if (b.kpx == 0.0) {
            break;
        }
        if (b.q == 0.0) {
            ++branches; // no deaths this year: the summand's exact limit is 0
            continue;
        }
        if (b.p < p_zero_threshold) {
            ++branches;
            sum.add(b.kpx * int_pow(static_cast<double>(k), spec.m));
            continue;
        }
        const double lambda = constant_force_lambda(b.p, b.q);
        if (use_dedicated_low_orders && spec.m == 1) {
            sum.add(b.kpx * (k * b.q + psi_stable(b.p, b.q, lambda)));
        } else if (use_dedicated_low_orders && spec.m == 2) {
            const double psi = psi_stable(b.p, b.q, lambda);
            const double chi = lambda * exp_moment_integral(2, lambda);
            sum.add(b.kpx * ((static_cast<double>(k) * k) * b.q +
                             2.0 * k * psi + chi));
        } else {
            sum.add(b.kpx * lambda *
                    poly_exp_year_integral(spec.m, static_cast<double>(k), lambda));
        }
    }
    return make_result(table, spec, plan, sum.value(), branches);
}

} // namespace

MomentResult lifetime_moment(const LifeTable& table, const ProductSpec& spec) {
    return lifetime_moment_impl(table, spec, true);
}

MomentResult lifetime_moment_general(const LifeTable& table,
                                     const ProductSpec& spec) {
    return lifetime_moment_impl(table, spec, false);
}

// ============================================================================
// Moments of T_x nu^{T_x}: the same polynomial-exponential year kernel
// with the combined rate log(nu^m p). The rate -> 0 limit (the
// incomplete-gamma ratio degenerating to a pure power integral) is the
// kernel's h = 0 path.
// ============================================================================

MomentResult increasing_continuous_moment(const LifeTable& table,
                                          const ProductSpec& spec) {
    validate_spec(spec, false);
    const WindowPlan plan = plan_window(table, spec, false);
    const double D = spec.m * std::log1p(spec.i);

    CompensatedSum sum;
    int branches = 0;
    for (int k = plan.k_begin; k < plan.k_end; ++k) {
        const ProbabilityBundle b = year_bundle(table, spec, plan, k);
        if (b.kpx == 0.0) {
            break;
        }
        const double discount = std::exp(-D * k);
        if (b.q == 0.0) {
            ++branches; // no deaths this year
            continue;
        }
        if (b.p < p_zero_threshold) {
            ++branches;
            sum.add(discount * b.kpx * int_pow(static_cast<double>(k), spec.m));
            continue;
        }
        const double lambda = constant_force_lambda(b.p, b.q);
        double rate = D + lambda; // = -log(nu^m p)
        if (std::abs(rate) < log_one_threshold) {
            ++branches;
            rate = 0.0; // exact power-integral limit
        }
        sum.add(discount * b.kpx * lambda *
                poly_exp_year_integral(spec.m, static_cast<double>(k), rate));
    }
    return make_result(table, spec, plan, sum.value(), branches);
}

// ============================================================================
// Sub-period (1/j-thly) products. Coverage with a sub-period deferment
// n1 > 0 is the union of sub-periods d = n1..j-1 of each full coverage
// year plus sub-periods d = 0..n1-1 of the year after the last one.
// ============================================================================

double short_interval_prob(const LifeTable& table, int x, int k, int d, int j) {
    if (j < 1) {
        throw OutOfRange("periods per year j must be at least 1");
    }
    if (d < 0 || d >= j) {
        throw OutOfRange("sub-period d = " + std::to_string(d) +
                         " must lie in [0, j)");
    }
    if (k < 0) {
        throw OutOfRange("year index k must be non-negative");
    }
    const ProbabilityBundle b = probability_bundle(table, x, k);
    if (b.kpx == 0.0) {
        return 0.0;
    }
    if (b.p == 0.0) {
        // Death within the year is certain and concentrates in the first
        // sub-period in the p -> 0 limit.
        return d == 0 ? b.kpx : 0.0;
    }
    const double lambda = constant_force_lambda(b.p, b.q);
    // kpx p^{d/j} (1 - p^{1/j}) with the powers taken through the year's
    // force, so the j sub-period probabilities telescope to kpx * q at
    // full precision.
    return b.kpx * std::exp(-(d * lambda) / j) * (-std::expm1(-lambda / j));
}

MomentResult mthly_insurance_moment(const LifeTable& table,
                                    const ProductSpec& spec) {
    validate_spec(spec, false);
    const WindowPlan plan = plan_window(table, spec, true);
    const double D = spec.m * std::log1p(spec.i);
    const double j = spec.j;

    CompensatedSum sum;
    int branches = 0;

    // Sub-periods d = d_begin..d_end-1 of the year starting k years after
    // issue: each contributes
    //   nu^{mk} kpx nu^{m(d+1)/j} p^{d/j} (1 - p^{1/j}).
    const auto add_year = [&](int k, int d_begin, int d_end) {
        const ProbabilityBundle b = year_bundle(table, spec, plan, k);
        if (b.kpx == 0.0) {
            return false;
        }
        const double discount = std::exp(-D * k);
        if (b.p < p_zero_threshold) {
            ++branches;
            if (d_begin == 0) {
                // All mass concentrates in the first sub-period.
                sum.add(discount * b.kpx * std::exp(-D / j));
            }
            return true;
        }
        const double lambda = constant_force_lambda(b.p, b.q);
        const double piece_prob = -std::expm1(-lambda / j); // 1 - p^{1/j}
        CompensatedSum inner;
        for (int d = d_begin; d < d_end; ++d) {
            inner.add(std::exp(-(d * lambda + (d + 1) * D) / j));
        }
        sum.add(discount * b.kpx * inner.value() * piece_prob);
        return true;
    };

    for (int k = plan.k_begin; k < plan.k_end; ++k) {
        if (!add_year(k, spec.n1, spec.j)) {
            break;
        }
    }
    if (plan.mthly_tail) {
        add_year(plan.k_end, 0, spec.n1);
    }
    return make_result(table, spec, plan, sum.value(), branches);
}

MomentResult mthly_increasing_moment(const LifeTable& table,
                                     const ProductSpec& spec) {
    validate_spec(spec, false);
    const WindowPlan plan = plan_window(table, spec, true);
    const double D = spec.m * std::log1p(spec.i);
    const double j = spec.j;

    CompensatedSum sum;
    int branches = 0;

    // Sub-periods d = d_begin..d_end-1 of the year starting k years after
    // issue: the benefit level there is d + jk + 1, and each contributes
    //   nu^{mk} kpx (d+jk+1)^m lambda e^{d L / j} (e^{L/j} - 1) / L
    // with L = log(nu^m p).
    const auto add_year = [&](int k, int d_begin, int d_end) {
        const ProbabilityBundle b = year_bundle(table, spec, plan, k);
        if (b.kpx == 0.0) {
            return false;
        }
        const double discount = std::exp(-D * k);
        if (b.p < p_zero_threshold) {
            ++branches;
            if (d_begin == 0) {
                sum.add(discount * b.kpx *
                        int_pow(static_cast<double>(spec.j) * k + 1.0, spec.m));
            }
            return true;
        }
        const double lambda = constant_force_lambda(b.p, b.q);
        const double L = -(D + lambda);
        double rate_factor;
        if (std::abs(L) < log_one_threshold) {
            ++branches;
            rate_factor = lambda * (1.0 / j + L / (2.0 * j * j));
        } else {
            rate_factor = lambda * std::expm1(L / j) / L;
        }
        CompensatedSum inner;
        for (int d = d_begin; d < d_end; ++d) {
            inner.add(int_pow(d + j * k + 1.0, spec.m) * std::exp(d * L / j));
        }
        sum.add(discount * b.kpx * rate_factor * inner.value());
        return true;
    };

    for (int k = plan.k_begin; k < plan.k_end; ++k) {
        if (!add_year(k, spec.n1, spec.j)) {
            break;
        }
    }
    if (plan.mthly_tail) {
        add_year(plan.k_end, 0, spec.n1);
    }
    return make_result(table, spec, plan, sum.value(), branches);
}

} // namespace lifemoments
