#include "lifemoments/products.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "lifemoments/closed_form.hpp"
#include "lifemoments/errors.hpp"
#include "lifemoments/gompertz.hpp"
#include "compensated_sum.hpp"
#include "contract_window.hpp"

namespace lifemoments {

std::string_view to_string(ProductKind kind) noexcept {
    switch (kind) {
    case ProductKind::TermInsurance:
        return "term-insurance";
    case ProductKind::Lifetime:
        return "lifetime";
    case ProductKind::IncreasingContinuous:
        return "increasing-continuous";
    case ProductKind::IncreasingAnnual:
        return "increasing-annual";
    case ProductKind::DecreasingAnnual:
        return "decreasing-annual";
    case ProductKind::MthlyInsurance:
        return "mthly-insurance";
    case ProductKind::MthlyIncreasing:
        return "mthly-increasing";
    }
    return "unknown";
}

MomentResult closed_form_moment(const LifeTable& table, ProductKind kind,
                                const ProductSpec& spec) {
    switch (kind) {
    case ProductKind::TermInsurance:
        return term_insurance_moment(table, spec);
    case ProductKind::Lifetime:
        return lifetime_moment(table, spec);
    case ProductKind::IncreasingContinuous:
        return increasing_continuous_moment(table, spec);
    case ProductKind::IncreasingAnnual:
        return increasing_annual_moment(table, spec);
    case ProductKind::DecreasingAnnual:
        return decreasing_annual_moment(table, spec);
    case ProductKind::MthlyInsurance:
        return mthly_insurance_moment(table, spec);
    case ProductKind::MthlyIncreasing:
        return mthly_increasing_moment(table, spec);
    }
    throw OutOfRange("unknown product kind");
}

Payoff product_payoff(ProductKind kind, const ProductSpec& spec) {
    if (spec.m < 0 || (spec.m < 1 && kind != ProductKind::Lifetime)) {
        throw OutOfRange("moment order m must be at least 1 (0 for lifetime)");
    }
    if (!std::isfinite(spec.i) || spec.i <= -1.0) {
        throw OutOfRange("interest rate must be finite and greater than -1");
    }
    if (spec.j < 1) {
        throw OutOfRange("periods per year j must be at least 1");
    }
    const double D = spec.m * std::log1p(spec.i);
    const int m = spec.m;
    const double j = spec.j;

    Payoff payoff;
    switch (kind) {
    case ProductKind::TermInsurance:
        // g(t) = nu^{mt}
        payoff.evaluator = [D](double t) { return std::exp(-D * t); };
        payoff.year_monotonicity = spec.i >= 0.0
                                       ? YearMonotonicity::NonIncreasing
                                       : YearMonotonicity::NonDecreasing;
        break;
    case ProductKind::Lifetime:
        // g(t) = t^m
        payoff.evaluator = [m](double t) {
            return std::pow(t, static_cast<double>(m));
        };
        payoff.year_monotonicity = YearMonotonicity::NonDecreasing;
        break;
    case ProductKind::IncreasingContinuous:
        // g(t) = (t nu^t)^m
        payoff.evaluator = [D, m](double t) {
            return std::pow(t, static_cast<double>(m)) * std::exp(-D * t);
        };
        payoff.year_monotonicity = spec.i <= 0.0 ? YearMonotonicity::NonDecreasing
                                                 : YearMonotonicity::Mixed;
        break;
    case ProductKind::IncreasingAnnual:
        // g(t) = (([t]+1) nu^t)^m
        payoff.evaluator = [D, m](double t) {
            return std::pow(std::floor(t) + 1.0, static_cast<double>(m)) *
                   std::exp(-D * t);
        };
        payoff.year_monotonicity = spec.i <= 0.0 ? YearMonotonicity::NonDecreasing
                                                 : YearMonotonicity::Mixed;
        break;
    case ProductKind::DecreasingAnnual: {
        if (!spec.term) {
            throw OutOfRange("a decreasing benefit requires a finite term");
        }
        // g(t) = ((n+l-[t]) nu^t)^m
        const double top = static_cast<double>(spec.l) + *spec.term;
        payoff.evaluator = [D, m, top](double t) {
            return std::pow(top - std::floor(t), static_cast<double>(m)) *
                   std::exp(-D * t);
        };
        payoff.year_monotonicity = spec.i >= 0.0 ? YearMonotonicity::NonIncreasing
                                                 : YearMonotonicity::Mixed;
        break;
    }
    case ProductKind::MthlyInsurance:
        // g(t) = nu^{m ([jt]+1)/j}
        payoff.evaluator = [D, j](double t) {
            return std::exp(-D * (std::floor(j * t) + 1.0) / j);
        };
        payoff.year_monotonicity = spec.i >= 0.0
                                       ? YearMonotonicity::NonIncreasing
                                       : YearMonotonicity::NonDecreasing;
        break;
    case ProductKind::MthlyIncreasing:
        // g(t) = (([jt]+1) nu^t)^m
        payoff.evaluator = [D, m, j](double t) {
            return std::pow(std::floor(j * t) + 1.0, static_cast<double>(m)) *
                   std::exp(-D * t);
        };
        payoff.year_monotonicity = spec.i <= 0.0 ? YearMonotonicity::NonDecreasing
                                                 : YearMonotonicity::Mixed;
        break;
    }
    if (!payoff.evaluator) {
        throw OutOfRange("unknown product kind");
    }
    return payoff;
}

namespace {

bool is_mthly(ProductKind kind) {
    return kind == ProductKind::MthlyInsurance ||
           kind == ProductKind::MthlyIncreasing;
}

} // namespace

MomentResult oracle_product_moment(const LifeTable& table, Assumption assumption,
                                   ProductKind kind, const ProductSpec& spec,
                                   const QuadratureOptions& options) {
    detail::validate_spec(spec, kind == ProductKind::Lifetime);
    if (kind == ProductKind::DecreasingAnnual && !spec.term) {
        throw OutOfRange("a decreasing benefit requires a finite term");
    }
    const detail::WindowPlan plan =
        detail::plan_window(table, spec, is_mthly(kind));
    if (plan.virtual_terminal) {
        throw InsufficientTable(
            "quadrature requires tabulated ages through the last covered "
            "year; a forced terminal year has no interpolable survivor data");
    }
    const Payoff payoff = product_payoff(kind, spec);

    MomentResult result{};
    result.method = Method::Oracle;
    result.assumption = assumption;
    result.horizon = spec.x + plan.k_end;

    if (!is_mthly(kind)) {
        result.value = expectation(table, assumption, spec.x, payoff,
                                   plan.k_begin, plan.k_end, options);
        return result;
    }

    // Sub-period products: integrate each covered sub-period separately so
    // no quadrature panel straddles a payoff jump at a d/j boundary. Each
    // piece gets a proportional share of the per-year error budget.
    QuadratureOptions piece_options = options;
    piece_options.abs_tol = options.abs_tol / spec.j;
    const double j = spec.j;

    detail::CompensatedSum sum;
    const auto add_piece = [&](int k, int d) {
        const double a = k + d / j;
        const double b = k + (d + 1) / j;
        sum.add(expectation(table, assumption, spec.x, payoff, a, b,
                            piece_options));
    };
    for (int k = plan.k_begin; k < plan.k_end; ++k) {
        if (table.survivors_at(spec.x + k) == 0.0) {
            break; // no mass remains beyond the terminal age
        }
        for (int d = spec.n1; d < spec.j; ++d) {
            add_piece(k, d);
        }
    }
    if (plan.mthly_tail) {
        for (int d = 0; d < spec.n1; ++d) {
            add_piece(plan.k_end, d);
        }
    }
    result.value = sum.value();
    return result;
}

MomentResult gompertz_product_moment(const GompertzParams& params,
                                     ProductKind kind, const ProductSpec& spec,
                                     double tol) {
    detail::validate_spec(spec, kind == ProductKind::Lifetime);
    if (spec.x < 0) {
        throw OutOfRange("issue age must be non-negative");
    }
    if (!std::isfinite(tol) || tol <= 0.0) {
        throw OutOfRange("tolerance must be positive");
    }
    const double s_x = survival(params, spec.x);
    if (s_x == 0.0) {
        throw ZeroExposure("no surviving mass at issue age " +
                           std::to_string(spec.x));
    }
    const Payoff base = product_payoff(kind, spec);

    // Work in the time scale of a life aged x: the conditional density of
    // the remaining lifetime is f_0(x+u) / s(x).
    Payoff shifted;
    shifted.year_monotonicity = base.year_monotonicity;
    shifted.evaluator = [evaluator = base.evaluator,
                         x = static_cast<double>(spec.x)](double v) {
        return evaluator(v - x);
    };

    // Whole-life windows stop where the surviving mass drops below
    // 1e-16 * tol (same cutoff exact_expectation applies internally).
    const double u_cut =
        std::log1p((params.alpha / params.beta) * std::log(1.0 / (1e-16 * tol))) /
        params.alpha;
    const bool whole_life = !spec.term.has_value();
    const double window_end =
        whole_life ? std::numeric_limits<double>::infinity()
                   : static_cast<double>(spec.l + *spec.term);

    MomentResult result{};
    result.method = Method::Oracle;
    result.horizon =
        whole_life ? static_cast<int>(std::ceil(u_cut))
                   : spec.x + spec.l + *spec.term;

    if (!is_mthly(kind)) {
        result.value = exact_expectation(params, shifted, spec.x + spec.l,
                                         spec.x + window_end, tol) /
                       s_x;
        return result;
    }

    // Sub-period pieces, mirroring the discrete-table oracle.
    const double piece_tol = tol / spec.j;
    const double j = spec.j;
    detail::CompensatedSum sum;
    const auto add_piece = [&](int k, int d) {
        const double a = spec.x + k + d / j;
        const double b = spec.x + k + (d + 1) / j;
        sum.add(exact_expectation(params, shifted, a, b, piece_tol));
    };
    const double k_stop =
        whole_life ? u_cut - spec.x : static_cast<double>(spec.l + *spec.term);
    for (int k = spec.l; static_cast<double>(k) < k_stop; ++k) {
        for (int d = spec.n1; d < spec.j; ++d) {
            add_piece(k, d);
        }
    }
    if (!whole_life && spec.n1 > 0) {
        for (int d = 0; d < spec.n1; ++d) {
            add_piece(spec.l + *spec.term, d);
        }
    }
    result.value = sum.value() / s_x;
    return result;
}

} // namespace lifemoments
