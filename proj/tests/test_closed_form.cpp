#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "lifemoments/closed_form.hpp"
#include "lifemoments/special_fn.hpp"

using namespace lifemoments;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

LifeTable window_table() {
    return LifeTable(50, {94058, 93563, 93048, 92500, 91866, 91228, 90450,
                          89649, 88868, 88107});
}

ProductSpec window_spec() {
    ProductSpec spec;
    spec.x = 50;
    spec.l = 2;
    spec.term = 7;
    spec.m = 1;
    spec.i = 0.03;
    return spec;
}

// ----------------------------------------------------------------------------
// Literal textbook transcriptions of the year-by-year sums, written with
// naive pow/log arithmetic. They are numerically fragile in general but
// exact enough on a well-conditioned window to cross-check the stabilized
// production forms to twelve digits.
// ----------------------------------------------------------------------------

struct YearTerms {
    double kpx;
    double p;
    double lambda;
};

YearTerms naive_year(const LifeTable& t, int x, int k) {
    YearTerms y{};
    y.kpx = t.survivors_at(x + k) / t.survivors_at(x);
    y.p = t.survivors_at(x + k + 1) / t.survivors_at(x + k);
    y.lambda = -std::log(y.p);
    return y;
}

double naive_insurance(const LifeTable& t, int x, int l, int n, int m, double i) {
    const double nu = 1.0 / (1.0 + i);
    double sum = 0.0;
    for (int k = l; k < l + n; ++k) {
        const YearTerms y = naive_year(t, x, k);
        const double rate = y.lambda + m * std::log(1.0 + i);
        sum += std::pow(nu, m * k) * y.kpx * y.lambda *
               (1.0 - std::pow(nu, m) * y.p) / rate;
    }
    return sum;
}

double naive_lifetime_m1(const LifeTable& t, int x, int l, int n) {
    double sum = 0.0;
    for (int k = l; k < l + n; ++k) {
        const YearTerms y = naive_year(t, x, k);
        const double q = 1.0 - y.p;
        sum += y.kpx * (k * q + q / y.lambda - y.p);
    }
    return sum;
}

double naive_lifetime_m2(const LifeTable& t, int x, int l, int n) {
    double sum = 0.0;
    for (int k = l; k < l + n; ++k) {
        const YearTerms y = naive_year(t, x, k);
        const double q = 1.0 - y.p;
        const double lam = y.lambda;
        sum += y.kpx *
               (static_cast<double>(k) * k * q + 2.0 * k * (q / lam - y.p) +
                (2.0 - y.p * (lam * lam + 2.0 * lam + 2.0)) / (lam * lam));
    }
    return sum;
}

double naive_binomial(int n, int r) {
    double value = 1.0;
    for (int s = 1; s <= r; ++s) {
        value *= static_cast<double>(n - r + s) / s;
    }
    return value;
}

double naive_increasing_continuous(const LifeTable& t, int x, int l, int n,
                                   int m, double i) {
    const double nu = 1.0 / (1.0 + i);
    double sum = 0.0;
    for (int k = l; k < l + n; ++k) {
        const YearTerms y = naive_year(t, x, k);
        const double rate = y.lambda + m * std::log(1.0 + i);
        double inner = 0.0;
        for (int r = 0; r <= m; ++r) {
            // int_0^1 u^r e^{-rate u} du via the truncated-exponential form
            double partial = 0.0;
            double fact_r = 1.0;
            double power = 1.0;
            double fact_t = 1.0;
            for (int s = 1; s <= r; ++s) fact_r *= s;
            for (int tt = 0; tt <= r; ++tt) {
                if (tt > 0) {
                    power *= rate;
                    fact_t *= tt;
                }
                partial += power / fact_t;
            }
            const double kernel =
                fact_r * (1.0 - std::exp(-rate) * partial) /
                std::pow(rate, r + 1);
            inner += naive_binomial(m, r) * std::pow(k, m - r) * kernel;
        }
        sum += y.kpx * y.lambda * std::pow(nu, m * k) * inner;
    }
    return sum;
}

double naive_weighted_annual(const LifeTable& t, int x, int l, int n, int m,
                             double i, bool decreasing) {
    const double nu = 1.0 / (1.0 + i);
    double sum = 0.0;
    for (int k = l; k < l + n; ++k) {
        const YearTerms y = naive_year(t, x, k);
        const double rate = y.lambda + m * std::log(1.0 + i);
        const double weight = decreasing ? static_cast<double>(n + l - k)
                                         : static_cast<double>(k + 1);
        sum += std::pow(nu, m * k) * std::pow(weight, m) * y.kpx * y.lambda *
               (1.0 - std::pow(nu, m) * y.p) / rate;
    }
    return sum;
}

double naive_mthly_insurance(const LifeTable& t, int x, int l, int n, int n1,
                             int j, int m, double i) {
    const double nu = 1.0 / (1.0 + i);
    double sum = 0.0;
    for (int k = l; k < l + n; ++k) {
        const YearTerms y = naive_year(t, x, k);
        for (int d = n1; d < j; ++d) {
            sum += std::pow(nu, m * k) * y.kpx *
                   std::pow(y.p, static_cast<double>(d) / j) *
                   std::pow(nu, m * static_cast<double>(d + 1) / j) *
                   (1.0 - std::pow(y.p, 1.0 / j));
        }
    }
    if (n1 > 0) {
        const YearTerms y = naive_year(t, x, l + n);
        for (int d = 0; d < n1; ++d) {
            sum += std::pow(nu, m * (l + n)) * y.kpx *
                   std::pow(y.p, static_cast<double>(d) / j) *
                   std::pow(nu, m * static_cast<double>(d + 1) / j) *
                   (1.0 - std::pow(y.p, 1.0 / j));
        }
    }
    return sum;
}

double naive_mthly_increasing(const LifeTable& t, int x, int l, int n, int n1,
                              int j, int m, double i) {
    const double nu = 1.0 / (1.0 + i);
    double sum = 0.0;
    const auto year_block = [&](int k, int d_begin, int d_end) {
        const YearTerms y = naive_year(t, x, k);
        const double nm_p = std::pow(nu, m) * y.p;
        const double factor = y.lambda * (1.0 - std::pow(nm_p, 1.0 / j)) /
                              (-std::log(nm_p));
        double inner = 0.0;
        for (int d = d_begin; d < d_end; ++d) {
            inner += std::pow(d + static_cast<double>(j) * k + 1.0, m) *
                     std::pow(nm_p, static_cast<double>(d) / j);
        }
        sum += std::pow(nu, m * k) * y.kpx * factor * inner;
    };
    for (int k = l; k < l + n; ++k) {
        year_block(k, n1, j);
    }
    if (n1 > 0) {
        year_block(l + n, 0, n1);
    }
    return sum;
}

} // namespace

// ============================================================================
// Benchmarked window: x = 50, deferred 2 years, 7-year coverage, i = 3%
// ============================================================================

TEST_CASE("insurance moments on the benchmark window", "[closed_form][insurance]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();

    REQUIRE_THAT(term_insurance_moment(table, spec).value,
                 WithinRel(0.0444332957053, 1e-11));
    spec.m = 2;
    REQUIRE_THAT(term_insurance_moment(table, spec).value,
                 WithinRel(0.03771113764, 1e-10));
}

TEST_CASE("lifetime moments on the benchmark window", "[closed_form][lifetime]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();

    REQUIRE_THAT(lifetime_moment(table, spec).value,
                 WithinRel(0.300540437491, 1e-11));
    spec.m = 2;
    REQUIRE_THAT(lifetime_moment(table, spec).value,
                 WithinRel(1.92194319781, 1e-11));
}

TEST_CASE("continuously increasing moments on the benchmark window",
          "[closed_form][increasing]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();

    REQUIRE_THAT(increasing_continuous_moment(table, spec).value,
                 WithinRel(0.249128906766, 1e-11));
    spec.m = 2;
    REQUIRE_THAT(increasing_continuous_moment(table, spec).value,
                 WithinRel(1.2841041969, 1e-10));
}

TEST_CASE("annually increasing moments on the benchmark window",
          "[closed_form][increasing]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();

    REQUIRE_THAT(increasing_annual_moment(table, spec).value,
                 WithinRel(0.271484186164, 1e-11));
    spec.m = 2;
    REQUIRE_THAT(increasing_annual_moment(table, spec).value,
                 WithinRel(1.50003155938, 1e-11));
}

TEST_CASE("monthly-payment moments on the benchmark window",
          "[closed_form][mthly]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();
    spec.j = 12;

    REQUIRE_THAT(mthly_insurance_moment(table, spec).value,
                 WithinRel(0.0443785873968, 1e-11));
    REQUIRE_THAT(mthly_increasing_moment(table, spec).value,
                 WithinRel(3.01177508194, 1e-11));
    spec.m = 2;
    REQUIRE_THAT(mthly_insurance_moment(table, spec).value,
                 WithinRel(0.0376183124997, 1e-11));
    REQUIRE_THAT(mthly_increasing_moment(table, spec).value,
                 WithinRel(187.404919221, 1e-11));
}

TEST_CASE("moment results carry their provenance", "[closed_form]") {
    const LifeTable table = window_table();
    const MomentResult result = term_insurance_moment(table, window_spec());

    REQUIRE(result.method == Method::ClosedForm);
    REQUIRE(result.assumption == Assumption::ConstantForce);
    REQUIRE(result.horizon == 59);
    REQUIRE(result.limit_branches_taken == 0);
}

// ============================================================================
// Stabilized forms against literal textbook transcriptions
// ============================================================================

TEST_CASE("stabilized insurance sum matches the naive transcription",
          "[closed_form][transcription]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();

    for (int m = 1; m <= 4; ++m) {
        spec.m = m;
        REQUIRE_THAT(term_insurance_moment(table, spec).value,
                     WithinRel(naive_insurance(table, 50, 2, 7, m, 0.03), 1e-12));
    }
}

TEST_CASE("stabilized lifetime sums match the naive transcriptions",
          "[closed_form][transcription]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();

    REQUIRE_THAT(lifetime_moment(table, spec).value,
                 WithinRel(naive_lifetime_m1(table, 50, 2, 7), 1e-12));
    spec.m = 2;
    // The naive second-moment expression subtracts nearly equal quantities in
    // (2 - p(L^2+2L+2))/L^2, losing ~4/L^2 ulps of its own, so the comparison
    // is looser than the first-moment one.
    REQUIRE_THAT(lifetime_moment(table, spec).value,
                 WithinRel(naive_lifetime_m2(table, 50, 2, 7), 1e-10));
}

TEST_CASE("stabilized increasing sums match the naive transcriptions",
          "[closed_form][transcription]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();

    for (int m = 1; m <= 3; ++m) {
        spec.m = m;
        REQUIRE_THAT(
            increasing_continuous_moment(table, spec).value,
            WithinRel(naive_increasing_continuous(table, 50, 2, 7, m, 0.03),
                      1e-12));
        REQUIRE_THAT(
            increasing_annual_moment(table, spec).value,
            WithinRel(naive_weighted_annual(table, 50, 2, 7, m, 0.03, false),
                      1e-12));
        REQUIRE_THAT(
            decreasing_annual_moment(table, spec).value,
            WithinRel(naive_weighted_annual(table, 50, 2, 7, m, 0.03, true),
                      1e-12));
    }
}

TEST_CASE("stabilized sub-period sums match the naive transcriptions",
          "[closed_form][transcription][mthly]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();
    spec.j = 12;

    for (int m = 1; m <= 2; ++m) {
        spec.m = m;
        REQUIRE_THAT(
            mthly_insurance_moment(table, spec).value,
            WithinRel(naive_mthly_insurance(table, 50, 2, 7, 0, 12, m, 0.03),
                      1e-12));
        REQUIRE_THAT(
            mthly_increasing_moment(table, spec).value,
            WithinRel(naive_mthly_increasing(table, 50, 2, 7, 0, 12, m, 0.03),
                      1e-12));
    }
}

// ============================================================================
// Sub-period deferment: coverage is the union of late sub-periods of each
// full year plus the early sub-periods of the year after the last one
// ============================================================================

TEST_CASE("sub-period deferment prices the union event", "[closed_form][mthly]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();
    spec.term = 5;
    spec.n1 = 4;
    spec.j = 12;

    REQUIRE_THAT(mthly_insurance_moment(table, spec).value,
                 WithinRel(0.02307871291507853, 1e-13));
    REQUIRE_THAT(mthly_increasing_moment(table, spec).value,
                 WithinRel(1.40579541927994, 1e-13));

    REQUIRE_THAT(mthly_insurance_moment(table, spec).value,
                 WithinRel(naive_mthly_insurance(table, 50, 2, 5, 4, 12, 1, 0.03),
                           1e-12));
    REQUIRE_THAT(mthly_increasing_moment(table, spec).value,
                 WithinRel(naive_mthly_increasing(table, 50, 2, 5, 4, 12, 1, 0.03),
                           1e-12));
}

TEST_CASE("sub-period deferment needs one age beyond the coverage years",
          "[closed_form][mthly][error]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec(); // term 7 ends at age 59, the last age
    spec.n1 = 3;
    spec.j = 12;

    REQUIRE_THROWS_AS(mthly_insurance_moment(table, spec), OutOfRange);
    spec.term = 6; // now the tail year 58 -> 59 is tabulated
    REQUIRE(mthly_insurance_moment(table, spec).value > 0.0);
}

// ============================================================================
// Payment-frequency ladder
// ============================================================================

TEST_CASE("sub-period insurance increases with payment frequency toward the "
          "continuous value",
          "[closed_form][mthly][ladder]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();
    const double continuous = term_insurance_moment(table, spec).value;

    double previous = 0.0;
    for (const int j : {1, 2, 4, 12, 52, 365}) {
        spec.j = j;
        const double value = mthly_insurance_moment(table, spec).value;
        REQUIRE(value > previous);
        REQUIRE(value < continuous);
        previous = value;
    }
    spec.j = 365;
    REQUIRE_THAT(mthly_insurance_moment(table, spec).value,
                 WithinRel(0.0444314965519, 1e-11));
    REQUIRE((continuous - previous) / continuous < 4.1e-5);
}

// ============================================================================
// Structural identities
// ============================================================================

TEST_CASE("insurance at zero interest is the interval death probability",
          "[closed_form][identity]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();
    spec.i = 0.0;

    ProductSpec death_spec = spec;
    death_spec.m = 0;
    const double death_prob = lifetime_moment(table, death_spec).value;
    REQUIRE(death_prob == (93048.0 - 88107.0) / 94058.0);

    for (int m = 1; m <= 4; ++m) {
        spec.m = m;
        REQUIRE_THAT(term_insurance_moment(table, spec).value,
                     WithinRel(death_prob, 1e-14));
        spec.j = 12;
        REQUIRE_THAT(mthly_insurance_moment(table, spec).value,
                     WithinRel(death_prob, 1e-14));
        spec.j = 1;
    }
}

TEST_CASE("sub-period death probabilities telescope to the annual one",
          "[closed_form][identity]") {
    const LifeTable table = window_table();

    for (const int j : {1, 4, 12}) {
        for (int k = 0; k < 9; ++k) {
            double sum = 0.0;
            for (int d = 0; d < j; ++d) {
                sum += short_interval_prob(table, 50, k, d, j);
            }
            const ProbabilityBundle b = probability_bundle(table, 50, k);
            REQUIRE_THAT(sum, WithinRel(b.kpx * b.q, 1e-14));
        }
    }
}

TEST_CASE("single-period products collapse to their annual forms",
          "[closed_form][identity]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();
    spec.j = 1;

    for (int m = 1; m <= 3; ++m) {
        spec.m = m;
        // With one period per year the periodic insurance pays at the end of
        // the year of death: sum of nu^(m(k+1)) kpx q over the window.
        const double nu = 1.0 / 1.03;
        double end_of_year = 0.0;
        for (int k = 2; k < 9; ++k) {
            const ProbabilityBundle b = probability_bundle(table, 50, k);
            end_of_year += std::pow(nu, m * (k + 1)) * b.kpx * b.q;
        }
        REQUIRE_THAT(mthly_insurance_moment(table, spec).value,
                     WithinRel(end_of_year, 1e-13));
        // The periodic increasing benefit steps once per period but is paid
        // at the moment of death, so one period per year reproduces the
        // annually-increasing contract exactly.
        REQUIRE_THAT(mthly_increasing_moment(table, spec).value,
                     WithinRel(increasing_annual_moment(table, spec).value,
                               1e-14));
    }
}

TEST_CASE("coverage windows are additive in the deferment", "[closed_form][identity]") {
    const LifeTable table = window_table();
    ProductSpec front = window_spec();
    front.term = 3; // years 2, 3, 4
    ProductSpec back = window_spec();
    back.l = 5;
    back.term = 4; // years 5..8
    ProductSpec whole = window_spec(); // years 2..8

    REQUIRE_THAT(term_insurance_moment(table, front).value +
                     term_insurance_moment(table, back).value,
                 WithinRel(term_insurance_moment(table, whole).value, 1e-14));
    front.m = back.m = whole.m = 2;
    REQUIRE_THAT(lifetime_moment(table, front).value +
                     lifetime_moment(table, back).value,
                 WithinRel(lifetime_moment(table, whole).value, 1e-14));
}

TEST_CASE("dedicated low-order lifetime forms agree with the general kernel",
          "[closed_form][identity]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();

    for (int m = 1; m <= 2; ++m) {
        spec.m = m;
        REQUIRE_THAT(lifetime_moment(table, spec).value,
                     WithinRel(lifetime_moment_general(table, spec).value,
                               1e-13));
    }
}

TEST_CASE("second moments dominate squared first moments", "[closed_form][identity]") {
    const LifeTable table = window_table();
    ProductSpec m1 = window_spec();
    ProductSpec m2 = window_spec();
    m2.m = 2;

    const double a1 = term_insurance_moment(table, m1).value;
    const double a2 = term_insurance_moment(table, m2).value;
    REQUIRE(a2 >= a1 * a1);
}

// ============================================================================
// Whole-life windows
// ============================================================================

TEST_CASE("whole-life summation stops at the terminal age",
          "[closed_form][whole_life]") {
    const LifeTable table(70, {1000, 600, 250, 60, 0, 0});
    ProductSpec spec;
    spec.x = 70;
    spec.m = 1;
    spec.i = 0.04;

    const MomentResult result = term_insurance_moment(table, spec);
    REQUIRE(result.horizon == 74);

    ProductSpec termed = spec;
    termed.term = 4;
    REQUIRE(result.value == term_insurance_moment(table, termed).value);
}

TEST_CASE("whole-life death probability is one", "[closed_form][whole_life]") {
    const LifeTable table(70, {1000, 600, 250, 60, 0});
    ProductSpec spec;
    spec.x = 70;
    spec.m = 0;

    REQUIRE(lifetime_moment(table, spec).value == 1.0);
}

TEST_CASE("whole life on an open table requires a forced terminal year",
          "[closed_form][whole_life]") {
    const LifeTable table = window_table();
    ProductSpec spec = window_spec();
    spec.term.reset();

    REQUIRE_THROWS_AS(term_insurance_moment(table, spec), InsufficientTable);

    spec.force_terminal = true;
    const MomentResult forced = term_insurance_moment(table, spec);
    REQUIRE(forced.horizon == 60);

    // Appending an explicit zero row gives the identical sum.
    const LifeTable closed(50, {94058, 93563, 93048, 92500, 91866, 91228,
                                90450, 89649, 88868, 88107, 0});
    REQUIRE(forced.value == term_insurance_moment(closed, spec).value);
    REQUIRE(forced.limit_branches_taken ==
            term_insurance_moment(closed, spec).limit_branches_taken);
}

TEST_CASE("whole-life sub-period deferment has no tail year",
          "[closed_form][whole_life][mthly]") {
    const LifeTable table(70, {1000, 600, 250, 60, 0, 0});
    ProductSpec whole;
    whole.x = 70;
    whole.m = 1;
    whole.i = 0.03;
    whole.j = 12;
    whole.n1 = 5;

    ProductSpec termed = whole;
    termed.term = 4;

    // On a closed table the tail year starts at the terminal age and
    // carries no mass, so the windows coincide.
    REQUIRE_THAT(mthly_insurance_moment(table, whole).value,
                 WithinRel(mthly_insurance_moment(table, termed).value, 1e-15));
}

// ============================================================================
// Degenerate-year limit branches
// ============================================================================

TEST_CASE("a unit discount-survival product takes the exact limit branch",
          "[closed_form][limits]") {
    // p = 1/2 and i = -1/2 make nu^m p = 1 exactly: the year's factor
    // (e^L - 1)/L degenerates to its limit 1 and the summand to lambda.
    const LifeTable table(0, {2, 1});
    ProductSpec spec;
    spec.x = 0;
    spec.term = 1;
    spec.m = 1;
    spec.i = -0.5;

    const MomentResult result = term_insurance_moment(table, spec);
    REQUIRE(result.limit_branches_taken == 1);
    REQUIRE_THAT(result.value, WithinRel(0.6931471805599453, 1e-15));

    // Continuity: nudging the interest rate off the exact degeneracy moves
    // the value only at second order.
    ProductSpec nudged = spec;
    nudged.i = -0.5 + 2e-9;
    REQUIRE(term_insurance_moment(table, nudged).limit_branches_taken == 0);
    REQUIRE_THAT(term_insurance_moment(table, nudged).value,
                 WithinRel(result.value, 1e-7));
}

TEST_CASE("a vanishing survival probability takes the exact limit branch",
          "[closed_form][limits]") {
    const LifeTable branch_table(0, {1.0, 1e-310});
    const LifeTable direct_table(0, {1.0, 1e-299});
    ProductSpec spec;
    spec.x = 0;
    spec.term = 1;
    spec.m = 1;
    spec.i = 0.0;

    const MomentResult branch = term_insurance_moment(branch_table, spec);
    REQUIRE(branch.limit_branches_taken == 1);
    REQUIRE(branch.value == 1.0);

    // Just above the trigger the direct formula is still finite and agrees.
    const MomentResult direct = term_insurance_moment(direct_table, spec);
    REQUIRE(direct.limit_branches_taken == 0);
    REQUIRE_THAT(direct.value, WithinRel(1.0, 1e-10));
}

TEST_CASE("vanishing survival in a far year keeps lifetime moments continuous",
          "[closed_form][limits]") {
    // A single covered year at k = 150: the limit value is k * kpx and the
    // direct value at p just above the trigger differs by psi/k ~ 1e-5.
    std::vector<double> survivors(151, 1.0);
    survivors.push_back(1e-310);
    const LifeTable branch_table(0, survivors);
    survivors[151] = 1e-299;
    const LifeTable direct_table(0, survivors);

    ProductSpec spec;
    spec.x = 0;
    spec.l = 150;
    spec.term = 1;
    spec.m = 1;

    const MomentResult branch = lifetime_moment(branch_table, spec);
    REQUIRE(branch.limit_branches_taken == 1);
    REQUIRE(branch.value == 150.0);

    const MomentResult direct = lifetime_moment(direct_table, spec);
    REQUIRE(direct.limit_branches_taken == 0);
    REQUIRE_THAT(direct.value, WithinRel(150.0, 1e-5));
}

TEST_CASE("zero-mortality years contribute their exact zero limit",
          "[closed_form][limits]") {
    const LifeTable table(0, {1.0, 1.0, 0.5, 0.25});
    ProductSpec with_plateau;
    with_plateau.x = 0;
    with_plateau.term = 2;
    with_plateau.m = 1;
    ProductSpec skipped = with_plateau;
    skipped.l = 1;
    skipped.term = 1;

    const MomentResult full = lifetime_moment(table, with_plateau);
    REQUIRE(full.limit_branches_taken == 1);
    REQUIRE(full.value == lifetime_moment(table, skipped).value);
}

TEST_CASE("sub-period limit branches keep the first covered sub-period",
          "[closed_form][limits][mthly]") {
    const LifeTable table(0, {1.0, 1e-310});
    ProductSpec spec;
    spec.x = 0;
    spec.term = 1;
    spec.m = 1;
    spec.i = 0.03;
    spec.j = 12;

    // All the dying mass concentrates in the first sub-period, so the
    // payment discounts by one sub-period exactly.
    const MomentResult insurance = mthly_insurance_moment(table, spec);
    REQUIRE(insurance.limit_branches_taken == 1);
    REQUIRE_THAT(insurance.value,
                 WithinRel(std::pow(1.03, -1.0 / 12.0), 1e-14));

    ProductSpec level = spec;
    level.i = 0.0;
    const MomentResult increasing = mthly_increasing_moment(table, level);
    REQUIRE(increasing.limit_branches_taken == 1);
    REQUIRE(increasing.value == 1.0);
}

// ============================================================================
// Sub-period death probabilities
// ============================================================================

TEST_CASE("sub-period death probability matches its radical form",
          "[closed_form][short_interval]") {
    const LifeTable table(0, {1.0, 0.8, 0.64});

    // kpx p^{d/j} (1 - p^{1/j}) at p = 0.8, d = 6, j = 12
    const double expected =
        std::sqrt(0.8) * (1.0 - std::pow(0.8, 1.0 / 12.0));
    REQUIRE_THAT(short_interval_prob(table, 0, 0, 6, 12),
                 WithinRel(expected, 1e-13));
    REQUIRE_THAT(short_interval_prob(table, 0, 0, 6, 12),
                 WithinRel(0.0164784526, 1e-8));

    // j = 1 collapses to the annual death probability.
    REQUIRE_THAT(short_interval_prob(table, 0, 0, 0, 1),
                 WithinRel(0.2, 1e-15));
}

TEST_CASE("sub-period death probability handles edge years",
          "[closed_form][short_interval]") {
    const LifeTable table(0, {1.0, 0.5, 0.0, 0.0});

    // Past the terminal age there is no mass.
    REQUIRE(short_interval_prob(table, 0, 2, 3, 12) == 0.0);
    // A year in which death is certain concentrates in the first sub-period.
    REQUIRE(short_interval_prob(table, 0, 1, 0, 12) == 0.5);
    REQUIRE(short_interval_prob(table, 0, 1, 1, 12) == 0.0);
}

TEST_CASE("sub-period death probability validates its indices",
          "[closed_form][short_interval][error]") {
    const LifeTable table = window_table();

    REQUIRE_THROWS_AS(short_interval_prob(table, 50, 0, 12, 12), OutOfRange);
    REQUIRE_THROWS_AS(short_interval_prob(table, 50, 0, -1, 12), OutOfRange);
    REQUIRE_THROWS_AS(short_interval_prob(table, 50, 0, 0, 0), OutOfRange);
    REQUIRE_THROWS_AS(short_interval_prob(table, 50, -1, 0, 12), OutOfRange);
    REQUIRE_THROWS_AS(short_interval_prob(table, 50, 9, 0, 12), OutOfRange);
}

// ============================================================================
// Specification errors
// ============================================================================

TEST_CASE("moment operations validate the contract fields",
          "[closed_form][error]") {
    const LifeTable table = window_table();
    const ProductSpec good = window_spec();

    ProductSpec bad = good;
    bad.m = 0;
    REQUIRE_THROWS_AS(term_insurance_moment(table, bad), OutOfRange);
    bad.m = -1;
    REQUIRE_THROWS_AS(lifetime_moment(table, bad), OutOfRange);
    bad.m = max_moment_order + 1;
    REQUIRE_THROWS_AS(term_insurance_moment(table, bad), Overflow);

    bad = good;
    bad.i = -1.0;
    REQUIRE_THROWS_AS(term_insurance_moment(table, bad), OutOfRange);
    bad.i = std::numeric_limits<double>::quiet_NaN();
    REQUIRE_THROWS_AS(term_insurance_moment(table, bad), OutOfRange);

    bad = good;
    bad.j = 0;
    REQUIRE_THROWS_AS(mthly_insurance_moment(table, bad), OutOfRange);
    bad = good;
    bad.j = 12;
    bad.n1 = 12;
    REQUIRE_THROWS_AS(mthly_insurance_moment(table, bad), OutOfRange);
    bad.n1 = -1;
    REQUIRE_THROWS_AS(mthly_insurance_moment(table, bad), OutOfRange);

    bad = good;
    bad.l = -1;
    REQUIRE_THROWS_AS(term_insurance_moment(table, bad), OutOfRange);
    bad = good;
    bad.term = 0;
    REQUIRE_THROWS_AS(term_insurance_moment(table, bad), OutOfRange);

    bad = good;
    bad.term.reset();
    REQUIRE_THROWS_AS(decreasing_annual_moment(table, bad), OutOfRange);
}

TEST_CASE("moment operations validate the window against the table",
          "[closed_form][error]") {
    const LifeTable table = window_table();

    ProductSpec outside = window_spec();
    outside.x = 49;
    REQUIRE_THROWS_AS(term_insurance_moment(table, outside), OutOfRange);

    ProductSpec long_term = window_spec();
    long_term.term = 8; // needs age 60
    REQUIRE_THROWS_AS(term_insurance_moment(table, long_term), OutOfRange);

    const LifeTable dead(0, {100, 0, 0});
    ProductSpec from_dead;
    from_dead.x = 1;
    from_dead.term = 1;
    from_dead.m = 1;
    REQUIRE_THROWS_AS(term_insurance_moment(dead, from_dead), ZeroExposure);
}
