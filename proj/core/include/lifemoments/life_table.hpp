#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lifemoments/errors.hpp"

namespace lifemoments {

/// Discrete mortality data: expected survivor counts l_x at consecutive
/// integer ages. Immutable after construction; all operations are pure
/// and safe to share across threads.
///
/// Invariants enforced on construction:
///  - at least one entry,
///  - survivor counts are finite, non-negative, and non-increasing,
///  - the first entry (the radix) is strictly positive.
///
/// Trailing zero-survivor ages are retained: the first age with zero
/// survivors defines the terminal age.
class LifeTable {
public:
    LifeTable(int base_age, std::vector<double> survivors);

    /// First tabulated age.
    [[nodiscard]] int base_age() const noexcept { return base_age_; }

    /// Last tabulated age.
    [[nodiscard]] int last_age() const noexcept {
        return base_age_ + static_cast<int>(survivors_.size()) - 1;
    }

    /// Number of tabulated ages.
    [[nodiscard]] std::size_t size() const noexcept { return survivors_.size(); }

    /// True if `age` is tabulated.
    [[nodiscard]] bool covers(int age) const noexcept {
        return age >= base_age_ && age <= last_age();
    }

    /// Survivor count l_age; raises OutOfRange if `age` is not tabulated.
    [[nodiscard]] double survivors_at(int age) const;

    /// Survivor count at the base age (always > 0).
    [[nodiscard]] double radix() const noexcept { return survivors_[0]; }

    /// First age with zero survivors, or absent if the table never
    /// reaches zero.
    [[nodiscard]] std::optional<int> terminal_age() const noexcept;

    /// The raw survivor sequence, indexed from base_age().
    [[nodiscard]] const std::vector<double>& survivors() const noexcept {
        return survivors_;
    }

private:
    int base_age_;
    std::vector<double> survivors_;
};

/// One-year survival and death probabilities at a single age, plus the
/// survival probability over the preceding k years. By construction
/// p + q == 1 holds exactly in floating point.
struct ProbabilityBundle {
    double p;   ///< one-year survival probability p_{x+k}
    double q;   ///< one-year death probability q_{x+k} = 1 - p_{x+k}
    double kpx; ///< k-year survival probability l_{x+k} / l_x
};

/// One-year survival probability l_{age+1} / l_age.
/// Raises OutOfRange (age or age+1 untabulated), ZeroExposure (l_age = 0).
[[nodiscard]] double one_year_p(const LifeTable& table, int age);

/// One-year death probability 1 - one_year_p; the complement is exact.
[[nodiscard]] double one_year_q(const LifeTable& table, int age);

/// k-year survival probability l_{age+k} / l_age. Equals the product of
/// one_year_p over the window. Raises OutOfRange, ZeroExposure.
[[nodiscard]] double k_year_p(const LifeTable& table, int age, int k);

/// Bundle of p and q at age x+k together with the k-year survival
/// probability from age x. Raises OutOfRange, ZeroExposure (l_x = 0).
/// When l_{x+k} = 0 the year carries no mass and p = 0, q = 1 are
/// reported.
[[nodiscard]] ProbabilityBundle probability_bundle(const LifeTable& table, int x, int k);

/// Parse a life table from CSV text with header `age,lx`, one row per
/// consecutive age, `.` decimal separator.
/// Raises MalformedCsv, NonMonotone, NonConsecutiveAges, EmptyTable.
[[nodiscard]] LifeTable load_life_table(std::istream& source);

/// Convenience file-path overload of load_life_table.
[[nodiscard]] LifeTable load_life_table_file(const std::string& path);

/// Serialize a table back to CSV. Survivor values are written with the
/// shortest decimal representation that parses back to the identical
/// double, so load -> serialize -> load round-trips bit-exactly.
[[nodiscard]] std::string serialize_life_table(const LifeTable& table);

} // namespace lifemoments
