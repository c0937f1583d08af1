#pragma once

#include "exactrank/gap_profile.hpp"

namespace exactrank {

// Sample-complexity lower-bound diagnostics. Both formulas report the raw
// sum with no hidden constant, in natural logs. The log log(1/gap) term is
// clamped at 0: it would be negative for gaps above 1/e, and the bound is
// meaningful as gaps shrink. Items without a finite adjacent gap (n = 1)
// contribute nothing.

/// sum_i gap_i^-2 * (max(log log(1/gap_i), 0) + log(n/delta))
/// over the adjacent gaps gap_i = delta_tilde_i. delta must be in (0,1).
double lower_bound_eq2(const gap_profile& profile, std::uint32_t n, double delta);

/// sum_i gap_i^-2 * (max(log log(1/gap_i), 0) + log(1/delta))
///   + min { sum_i gap_i^-2 log(1/x_i) : sum_i x_i <= 1 }.
/// The inner minimization is solved in closed form: with w_i = gap_i^-2 the
/// optimum is x_i = w_i / sum_j w_j, giving sum_i w_i log(sum_j w_j / w_i).
double lower_bound_eq1(const gap_profile& profile, std::uint32_t n, double delta);

/// The inner minimization term of eq. 1 on its own (closed form). Exposed so
/// tests can pit it against an independent grid search.
double eq1_inner_min(const gap_profile& profile);

}  // namespace exactrank
