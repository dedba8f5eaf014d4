#include "lifemoments/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "lifemoments/errors.hpp"
#include "compensated_sum.hpp"

namespace lifemoments {

namespace {

// ============================================================================
// Gauss-Kronrod (G7, K15) rule on [-1, 1]. The embedded 7-point Gauss rule
// shares the odd-indexed Kronrod abscissae, so one sweep of 15 integrand
// evaluations yields both estimates; their difference is the panel's error
// estimate.
// ============================================================================

constexpr double kronrod_nodes[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0,
};

constexpr double kronrod_weights[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801,
};

constexpr double gauss_weights[4] = {
    0.12948496616886969327, 0.27970539148927666790, 0.38183005050511894495,
    0.41795918367346938776,
};

struct PanelEstimate {
    double integral = 0.0;
    double error = 0.0;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f_center = f(center);
    double kronrod = kronrod_weights[7] * f_center;
    double gauss = gauss_weights[3] * f_center;
    for (int idx = 0; idx < 7; ++idx) {
        const double offset = half * kronrod_nodes[idx];
        const double pair = f(center - offset) + f(center + offset);
        kronrod += kronrod_weights[idx] * pair;
        if (idx % 2 == 1) {
            gauss += gauss_weights[idx / 2] * pair;
        }
    }
    PanelEstimate estimate;
    estimate.integral = kronrod * half;
    estimate.error = std::abs(kronrod - gauss) * std::abs(half);
    return estimate;
}

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double integral = 0.0;
    double error = 0.0;
};

struct PanelWorse {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        return lhs.error < rhs.error;
    }
};

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, double rel_tol,
                          int max_panels) {
    if (!(std::isfinite(a) && std::isfinite(b))) {
        throw OutOfRange("integration bounds must be finite");
    }
    if (max_panels < 1) {
        throw OutOfRange("panel budget must be at least 1");
    }
    if (b <= a) {
        return 0.0;
    }

    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> worklist;
    const PanelEstimate first = gk15(f, a, b);
    double total = first.integral;
    double error = first.error;
    worklist.push(Panel{a, b, first.integral, first.error});
    int panels = 1;

    while (error > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (panels >= max_panels) {
            throw NonConvergent("quadrature error " + std::to_string(error) +
                                " above tolerance after " +
                                std::to_string(panels) + " panels");
        }
        const Panel worst = worklist.top();
        worklist.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // The panel is too narrow to split; accept its estimate.
            error = std::max(error - worst.error, 0.0);
            continue;
        }
        const PanelEstimate left = gk15(f, worst.a, mid);
        const PanelEstimate right = gk15(f, mid, worst.b);
        total += (left.integral + right.integral) - worst.integral;
        error += (left.error + right.error) - worst.error;
        error = std::max(error, 0.0);
        worklist.push(Panel{worst.a, mid, left.integral, left.error});
        worklist.push(Panel{mid, worst.b, right.integral, right.error});
        ++panels;
    }
    return total;
}

double expectation(const LifeTable& table, Assumption assumption, int x,
                   const Payoff& payoff, double l_start, double l_end,
                   const QuadratureOptions& options) {
    if (!payoff.evaluator) {
        throw OutOfRange("payoff has no evaluator");
    }
    if (!std::isfinite(l_start) || !std::isfinite(l_end) || l_start < 0.0) {
        throw OutOfRange("integration window must be finite with l_start >= 0");
    }
    if (!table.covers(x)) {
        throw OutOfRange("age " + std::to_string(x) + " outside table range");
    }
    if (table.survivors_at(x) == 0.0) {
        throw ZeroExposure("no survivors at age " + std::to_string(x));
    }
    if (l_end <= l_start) {
        return 0.0;
    }

    detail::CompensatedSum total;

    const int k_first = static_cast<int>(std::floor(l_start));
    for (int k = k_first; static_cast<double>(k) < l_end; ++k) {
        const double a = std::max(l_start, static_cast<double>(k));
        const double b = std::min(l_end, static_cast<double>(k + 1));
        if (b <= a) {
            continue;
        }
        if (!table.covers(x + k + 1)) {
            throw OutOfRange("integration window needs age " +
                             std::to_string(x + k + 1) +
                             ", outside table range");
        }
        if (table.survivors_at(x + k) == 0.0) {
            break; // no mass remains beyond the terminal age
        }
        // Mass-based skip: the piece's contribution is bounded by the
        // probability of death within the year times the payoff magnitude
        // (sampled at the ends and middle; the factor 2 covers interior
        // variation of the smooth payoffs used here). Skipping under one
        // percent of the target keeps negligible-tail years from tripping
        // the degenerate-year density errors.
        const ProbabilityBundle bundle = probability_bundle(table, x, k);
        const double mid = 0.5 * (a + b);
        const double magnitude =
            2.0 * std::max({std::abs(payoff.evaluator(a)),
                            std::abs(payoff.evaluator(mid)),
                            std::abs(payoff.evaluator(b))});
        if (bundle.kpx * bundle.q * magnitude < 0.01 * options.abs_tol) {
            continue;
        }
        const auto integrand = [&](double t) {
            return payoff.evaluator(t) * density(table, assumption, x, t);
        };
        total.add(integrate_adaptive(integrand, a, b, options.abs_tol,
                                     options.rel_tol,
                                     options.max_panels_per_year));
    }
    return total.value();
}

double expectation(const LifeTable& table, Assumption assumption, int x,
                   const Payoff& payoff, double l_start, double l_end,
                   double tol) {
    QuadratureOptions options{};
    options.abs_tol = tol;
    return expectation(table, assumption, x, payoff, l_start, l_end, options);
}

OrderingReport ordering_check(const LifeTable& table, int x,
                              const Payoff& payoff, int l, int n,
                              const QuadratureOptions& options) {
    if (payoff.year_monotonicity == YearMonotonicity::Mixed) {
        throw MixedMonotonicity(
            "expectation ordering is only defined for payoffs with a declared "
            "monotone direction");
    }
    if (l < 0 || n < 1) {
        throw OutOfRange("ordering window must satisfy l >= 0 and n >= 1");
    }
    OrderingReport report{};
    report.declared = payoff.year_monotonicity;
    const auto l_start = static_cast<double>(l);
    const auto l_end = static_cast<double>(l + n);
    report.udd =
        expectation(table, Assumption::UDD, x, payoff, l_start, l_end, options);
    report.constant_force = expectation(table, Assumption::ConstantForce, x,
                                        payoff, l_start, l_end, options);
    report.balducci = expectation(table, Assumption::Balducci, x, payoff,
                                  l_start, l_end, options);
    report.tolerance = 10.0 * options.abs_tol * std::max(n, 1);
    if (report.declared == YearMonotonicity::NonIncreasing) {
        // Earlier within-year deaths (Balducci) raise the expectation of a
        // payoff that decays over time.
        report.holds =
            report.udd <= report.constant_force + report.tolerance &&
            report.constant_force <= report.balducci + report.tolerance;
    } else {
        report.holds =
            report.udd + report.tolerance >= report.constant_force &&
            report.constant_force + report.tolerance >= report.balducci;
    }
    return report;
}

double gamma_integrand_check(int a, double x_lo) {
    if (a < 1) {
        throw OutOfRange("gamma order a must be at least 1");
    }
    if (!std::isfinite(x_lo) || x_lo < 0.0) {
        throw OutOfRange("gamma lower limit must be finite and non-negative");
    }
    const auto integrand = [a](double t) {
        return std::pow(t, a - 1) * std::exp(-t);
    };
    const double x_hi = x_lo + 200.0;
    // First a coarse fixed-rule pass over unit panels to learn the
    // integral's scale, then an adaptive pass targeting a relative error,
    // so small-tail values (large x_lo) are still resolved to full
    // precision rather than merely below an absolute floor.
    double coarse = 0.0;
    for (double left = x_lo; left < x_hi; left += 1.0) {
        coarse += gk15(integrand, left, std::min(left + 1.0, x_hi)).integral;
    }
    double abs_target = 1e-13 * std::abs(coarse);
    if (abs_target == 0.0) {
        abs_target = 1e-300;
    }
    return integrate_adaptive(integrand, x_lo, x_hi, abs_target, 1e-13,
                              400000);
}

} // namespace lifemoments
