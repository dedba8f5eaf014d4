#include "lifemoments/special_fn.hpp"

#include <array>
#include <cmath>
#include <string>

namespace lifemoments {

namespace {

constexpr int max_factorial = max_moment_order + 2; // 22! is exactly representable

constexpr std::array<double, max_factorial + 1> factorial_table() {
    std::array<double, max_factorial + 1> table{};
    table[0] = 1.0;
    for (int n = 1; n <= max_factorial; ++n) {
        table[n] = table[n - 1] * static_cast<double>(n);
    }
    return table;
}

constexpr auto factorials = factorial_table();

} // namespace

double factorial(int n) {
    if (n < 0) {
        throw OutOfRange("factorial of negative n = " + std::to_string(n));
    }
    if (n > max_factorial) {
        throw Overflow("factorial order " + std::to_string(n) +
                       " exceeds the supported maximum " +
                       std::to_string(max_factorial));
    }
    return factorials[static_cast<std::size_t>(n)];
}

double upper_gamma_int(int a, double x) {
    if (a < 1) {
        throw OutOfRange("gamma order must be a positive integer, got " +
                         std::to_string(a));
    }
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw OutOfRange("gamma lower limit must be finite and non-negative");
    }
    const double fact = factorial(a - 1); // raises Overflow past the envelope

    // (a-1)! e^(-x) sum_{k=0}^{a-1} x^k / k! -- all terms positive.
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < a; ++k) {
        term *= x / static_cast<double>(k);
        sum += term;
    }
    return fact * std::exp(-x) * sum;
}

double exp_moment_integral(int r, double h) {
    if (r < 0 || r > max_moment_order + 1) {
        throw OutOfRange("integrand power r = " + std::to_string(r) +
                         " outside [0, " + std::to_string(max_moment_order + 1) + "]");
    }
    if (!std::isfinite(h)) {
        throw OutOfRange("exponential rate must be finite");
    }

    if (h == 0.0) {
        return 1.0 / static_cast<double>(r + 1);
    }

    if (h < 0.0) {
        // sum_s (-h)^s / (s! (r+s+1)): positive ascending series.
        const double g = -h;
        double power_over_fact = 1.0; // g^s / s!
        double sum = 1.0 / static_cast<double>(r + 1);
        for (int s = 1; s < 20000; ++s) {
            power_over_fact *= g / static_cast<double>(s);
            const double term = power_over_fact / static_cast<double>(r + s + 1);
            sum += term;
            if (term < sum * 1e-20) {
                break;
            }
        }
        return sum;
    }

    if (h > 500.0) {
        // The full Laplace integral over [0, inf); the neglected tail over
        // [1, inf) is below 1e-140 relative for h > 500, r <= 21.
        return factorial(r) / std::pow(h, static_cast<double>(r + 1));
    }

    // e^(-h) sum_t h^t / ((r+1)(r+2)...(r+1+t)): positive series.
    double term = 1.0 / static_cast<double>(r + 1);
    double sum = term;
    for (int t = 1; t < 100000; ++t) {
        term *= h / static_cast<double>(r + 1 + t);
        sum += term;
        if (term < sum * 1e-20) {
            break;
        }
    }
    return std::exp(-h) * sum;
}

double poly_exp_year_integral(int m, double k, double h) {
    if (m < 0 || m > max_moment_order) {
        if (m > max_moment_order) {
            throw Overflow("moment order " + std::to_string(m) +
                           " exceeds the supported maximum " +
                           std::to_string(max_moment_order));
        }
        throw OutOfRange("moment order must be non-negative");
    }
    if (!(k >= 0.0)) {
        throw OutOfRange("year offset k must be non-negative");
    }

    // sum_r C(m,r) k^(m-r) I_r(h): binomials and k-powers are positive,
    // so the expansion accumulates without cancellation.
    std::array<double, max_moment_order + 1> k_power{};
    k_power[0] = 1.0;
    for (int e = 1; e <= m; ++e) {
        k_power[static_cast<std::size_t>(e)] =
            k_power[static_cast<std::size_t>(e - 1)] * k;
    }
    double sum = 0.0;
    for (int r = 0; r <= m; ++r) {
        const double binom =
            factorials[static_cast<std::size_t>(m)] /
            (factorials[static_cast<std::size_t>(r)] *
             factorials[static_cast<std::size_t>(m - r)]);
        sum += binom * k_power[static_cast<std::size_t>(m - r)] *
               exp_moment_integral(r, h);
    }
    return sum;
}

} // namespace lifemoments
