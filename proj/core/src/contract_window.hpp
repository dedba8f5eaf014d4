#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "lifemoments/closed_form.hpp"
#include "lifemoments/errors.hpp"
#include "lifemoments/life_table.hpp"
#include "lifemoments/special_fn.hpp"

namespace lifemoments::detail {

/// Field checks shared by every moment operation.
inline void validate_spec(const ProductSpec& spec, bool allow_m0) {
    const int min_m = allow_m0 ? 0 : 1;
    if (spec.m < min_m) {
        throw OutOfRange("moment order m = " + std::to_string(spec.m) +
                         " must be at least " + std::to_string(min_m));
    }
    if (spec.m > max_moment_order) {
        throw Overflow("moment order m = " + std::to_string(spec.m) +
                       " exceeds the supported maximum " +
                       std::to_string(max_moment_order));
    }
    if (!std::isfinite(spec.i) || spec.i <= -1.0) {
        throw OutOfRange("interest rate must be finite and greater than -1");
    }
    if (spec.j < 1) {
        throw OutOfRange("periods per year j must be at least 1");
    }
    if (spec.n1 < 0 || spec.n1 >= spec.j) {
        throw OutOfRange("deferment sub-periods n1 = " + std::to_string(spec.n1) +
                         " must lie in [0, j)");
    }
    if (spec.l < 0) {
        throw OutOfRange("deferment years l must be non-negative");
    }
    if (spec.term && *spec.term < 1) {
        throw OutOfRange("term n must be at least 1 year");
    }
}

/// Resolved summation window for one contract on one table.
struct WindowPlan {
    int k_begin = 0;               ///< first covered year index (= l)
    int k_end = 0;                 ///< one past the last covered year index
    bool virtual_terminal = false; ///< treat the year after last_age as certain death
    bool mthly_tail = false;       ///< integrate sub-periods 0..n1-1 of year k_end
};

inline WindowPlan plan_window(const LifeTable& table, const ProductSpec& spec,
                              bool mthly) {
    if (!table.covers(spec.x)) {
        throw OutOfRange("issue age " + std::to_string(spec.x) +
                         " outside table range");
    }
    if (table.survivors_at(spec.x) == 0.0) {
        throw ZeroExposure("no survivors at issue age " + std::to_string(spec.x));
    }

    WindowPlan plan{};
    plan.k_begin = spec.l;

    if (spec.term) {
        plan.k_end = spec.l + *spec.term;
        plan.mthly_tail = mthly && spec.n1 > 0;
        // Every summed year k needs p_{x+k}, hence age x+k+1; the
        // sub-period tail needs p at age x + k_end as well.
        const int last_needed = spec.x + plan.k_end + (plan.mthly_tail ? 1 : 0);
        if (!table.covers(spec.x + spec.l) || !table.covers(last_needed)) {
            throw OutOfRange("table does not cover ages " +
                             std::to_string(spec.x + spec.l) + " .. " +
                             std::to_string(last_needed));
        }
        return plan;
    }

    // Whole life: sum while the survivor count stays positive.
    if (!table.covers(spec.x + spec.l)) {
        throw OutOfRange("table does not cover the deferred age " +
                         std::to_string(spec.x + spec.l));
    }
    if (const auto omega = table.terminal_age()) {
        plan.k_end = std::max(spec.l, *omega - spec.x);
    } else if (spec.force_terminal) {
        plan.k_end = table.last_age() + 1 - spec.x;
        plan.virtual_terminal = true;
    } else {
        throw InsufficientTable(
            "whole-life contract on a table whose survivor counts never reach "
            "zero; supply a longer table or set force_terminal");
    }
    // A sub-period tail year would start at the terminal age, where the
    // surviving mass is zero, so it never contributes for whole life.
    plan.mthly_tail = false;
    return plan;
}

/// Probability bundle for year k, honoring a virtual terminal year in
/// which death is certain.
inline ProbabilityBundle year_bundle(const LifeTable& table,
                                     const ProductSpec& spec,
                                     const WindowPlan& plan, int k) {
    if (plan.virtual_terminal && spec.x + k == table.last_age()) {
        ProbabilityBundle bundle{};
        bundle.kpx = table.survivors_at(spec.x + k) / table.survivors_at(spec.x);
        bundle.p = 0.0;
        bundle.q = 1.0;
        return bundle;
    }
    return probability_bundle(table, spec.x, k);
}

} // namespace lifemoments::detail
