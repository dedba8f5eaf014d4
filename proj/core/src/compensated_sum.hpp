#pragma once

#include <cmath>

namespace lifemoments::detail {

/// Compensated (Neumaier) accumulation for long decaying sums: the
/// correction term also captures the case where the addend outweighs the
/// running sum.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double value) {
        const double t = sum + value;
        if (std::abs(sum) >= std::abs(value)) {
            comp += (sum - t) + value;
        } else {
            comp += (value - t) + sum;
        }
        sum = t;
    }

    [[nodiscard]] double value() const { return sum + comp; }
};

} // namespace lifemoments::detail
