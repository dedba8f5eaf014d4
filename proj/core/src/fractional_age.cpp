#include "lifemoments/fractional_age.hpp"

#include <cmath>
#include <string>

namespace lifemoments {

std::string_view to_string(Assumption assumption) noexcept {
    switch (assumption) {
        case Assumption::UDD: return "UDD";
        case Assumption::ConstantForce: return "C";
        case Assumption::Balducci: return "B";
    }
    return "?";
}

double constant_force_lambda(double p, double q) noexcept {
    // -log(p) with the argument chosen so the better-conditioned half of
    // the complement pair feeds the logarithm.
    if (p >= 0.5) {
        return -std::log1p(-q);
    }
    return -std::log(p);
}

namespace {

struct YearPoint {
    int k;        ///< whole years elapsed since age x
    double tau;   ///< fractional part, in [0, 1)
};

YearPoint split_year(double u) {
    const double k_floor = std::floor(u);
    YearPoint point{};
    point.k = static_cast<int>(k_floor);
    point.tau = u - k_floor;
    return point;
}

void check_window(const LifeTable& table, int x, double u, int k) {
    if (u < 0.0 || !std::isfinite(u)) {
        throw OutOfRange("fractional horizon must be finite and non-negative, got " +
                         std::to_string(u));
    }
    if (!table.covers(x)) {
        throw OutOfRange("age " + std::to_string(x) + " outside table range");
    }
    if (!table.covers(x + k + 1)) {
        throw OutOfRange("age " + std::to_string(x) + " + " + std::to_string(u) +
                         " reaches past the table");
    }
    if (table.survivors_at(x) == 0.0) {
        throw ZeroExposure("no survivors at age " + std::to_string(x));
    }
}

} // namespace

double survival_fraction(const LifeTable& table, Assumption assumption, int x,
                         double u) {
    if (u < 0.0 || !std::isfinite(u)) {
        throw OutOfRange("fractional horizon must be finite and non-negative, got " +
                         std::to_string(u));
    }
    const YearPoint at = split_year(u);
    if (at.tau == 0.0) {
        // At a knot all three assumptions agree with the table ratio.
        return k_year_p(table, x, at.k);
    }
    check_window(table, x, u, at.k);

    const ProbabilityBundle b = probability_bundle(table, x, at.k);
    if (b.kpx == 0.0) {
        return 0.0; // past the terminal age
    }
    switch (assumption) {
        case Assumption::UDD: {
            const double lx = table.survivors_at(x);
            const double lk = table.survivors_at(x + at.k);
            const double lk1 = table.survivors_at(x + at.k + 1);
            return ((1.0 - at.tau) * lk + at.tau * lk1) / lx;
        }
        case Assumption::ConstantForce: {
            if (b.p == 0.0) {
                return 0.0; // p^tau = 0 for tau > 0
            }
            return b.kpx * std::exp(-at.tau * constant_force_lambda(b.p, b.q));
        }
        case Assumption::Balducci: {
            if (b.q == 1.0) {
                throw BalducciDegenerate(
                    "Balducci interpolation undefined on the year starting at age " +
                    std::to_string(x + at.k) + " (one-year death probability 1)");
            }
            // kpx * p / (1 - (1-tau) q), with the denominator regrouped as
            // p + tau q (exact because p + q = 1) to stay accurate for q
            // near 1.
            return b.kpx * b.p / (b.p + at.tau * b.q);
        }
    }
    throw OutOfRange("unknown assumption");
}

double density(const LifeTable& table, Assumption assumption, int x, double t) {
    const YearPoint at = split_year(t);
    check_window(table, x, t, at.k);

    const ProbabilityBundle b = probability_bundle(table, x, at.k);
    if (b.kpx == 0.0) {
        return 0.0; // past the terminal age
    }
    switch (assumption) {
        case Assumption::UDD: {
            const double lx = table.survivors_at(x);
            const double lk = table.survivors_at(x + at.k);
            const double lk1 = table.survivors_at(x + at.k + 1);
            return (lk - lk1) / lx;
        }
        case Assumption::ConstantForce: {
            if (b.p == 0.0) {
                throw DegenerateYear(
                    "constant-force density does not exist on the year starting at age " +
                    std::to_string(x + at.k) + " (one-year survival probability 0)");
            }
            const double lambda = constant_force_lambda(b.p, b.q);
            return b.kpx * std::exp(-at.tau * lambda) * lambda;
        }
        case Assumption::Balducci: {
            if (b.q == 1.0) {
                throw BalducciDegenerate(
                    "Balducci density undefined on the year starting at age " +
                    std::to_string(x + at.k) + " (one-year death probability 1)");
            }
            const double den = b.p + at.tau * b.q; // = 1 - (1-tau) q exactly
            return b.kpx * b.p * b.q / (den * den);
        }
    }
    throw OutOfRange("unknown assumption");
}

} // namespace lifemoments
