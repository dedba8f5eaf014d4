#include "lifemoments/gompertz.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "lifemoments/errors.hpp"
#include "lifemoments/oracle.hpp"
#include "compensated_sum.hpp"

namespace lifemoments {

namespace {

void validate_params(const GompertzParams& params) {
    if (!std::isfinite(params.alpha) || params.alpha <= 0.0 ||
        !std::isfinite(params.beta) || params.beta <= 0.0) {
        throw OutOfRange("Gompertz parameters alpha and beta must be positive "
                         "and finite");
    }
}

void validate_time(double u) {
    if (!std::isfinite(u) || u < 0.0) {
        throw OutOfRange("time must be finite and non-negative");
    }
}

} // namespace

double survival(const GompertzParams& params, double u) {
    validate_params(params);
    validate_time(u);
    // exp(-(beta/alpha) (e^(alpha u) - 1)), with the -1 folded into expm1
    // so small ages keep full precision.
    return std::exp(-(params.beta / params.alpha) * std::expm1(params.alpha * u));
}

double k_year_p(const GompertzParams& params, int x, int k) {
    validate_params(params);
    if (x < 0 || k < 0) {
        throw OutOfRange("ages must be non-negative");
    }
    return std::exp(-(params.beta / params.alpha) * std::exp(params.alpha * x) *
                    std::expm1(params.alpha * k));
}

double force(const GompertzParams& params, double u) {
    validate_params(params);
    validate_time(u);
    return params.beta * std::exp(params.alpha * u);
}

double density(const GompertzParams& params, double u) {
    return force(params, u) * survival(params, u);
}

LifeTable discretize(const GompertzParams& params, int max_age, double radix) {
    validate_params(params);
    if (max_age < 1) {
        throw OutOfRange("max_age must be at least 1");
    }
    if (!std::isfinite(radix) || radix <= 0.0) {
        throw OutOfRange("radix must be positive and finite");
    }
    std::vector<double> survivors;
    survivors.reserve(static_cast<std::size_t>(max_age) + 1);
    for (int age = 0; age <= max_age; ++age) {
        survivors.push_back(radix * survival(params, age));
    }
    return LifeTable(0, std::move(survivors));
}

double exact_expectation(const GompertzParams& params, const Payoff& payoff,
                         double l_start, double l_end, double tol) {
    validate_params(params);
    if (!payoff.evaluator) {
        throw OutOfRange("payoff has no evaluator");
    }
    if (!std::isfinite(l_start) || l_start < 0.0) {
        throw OutOfRange("window start must be finite and non-negative");
    }
    if (std::isnan(l_end)) {
        throw OutOfRange("window end must not be NaN");
    }
    if (!std::isfinite(tol) || tol <= 0.0) {
        throw OutOfRange("tolerance must be positive");
    }

    // Beyond u_cut the surviving mass is below eps = 1e-16 * tol, so the
    // neglected tail cannot move the result at the working tolerance:
    // survival(u) < eps  <=>  u > log1p((alpha/beta) log(1/eps)) / alpha.
    const double eps = 1e-16 * tol;
    const double u_cut =
        std::log1p((params.alpha / params.beta) * std::log(1.0 / eps)) /
        params.alpha;
    const double hi = std::min(l_end, u_cut);
    if (hi <= l_start) {
        return 0.0;
    }

    const auto integrand = [&](double u) {
        return payoff.evaluator(u) * density(params, u);
    };

    // Integrate year by year: the pieces mirror the discrete-table oracle,
    // and each unit span is cheap for the adaptive rule.
    detail::CompensatedSum total;
    const int k_first = static_cast<int>(std::floor(l_start));
    for (int k = k_first; static_cast<double>(k) < hi; ++k) {
        const double a = std::max(l_start, static_cast<double>(k));
        const double b = std::min(hi, static_cast<double>(k + 1));
        if (b <= a) {
            continue;
        }
        total.add(integrate_adaptive(integrand, a, b, tol, 1e-13, 2000));
    }
    return total.value();
}

} // namespace lifemoments
