#include "exactrank/bounds.hpp"

#include <cmath>

#include "exactrank/errors.hpp"

namespace exactrank {

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw invalid_param_error("confidence delta must lie in (0,1)");
}

double loglog_term(double gap) {
  // max(log log(1/gap), 0); gap <= 1/2 so log(1/gap) >= log 2 > 0.
  return std::max(std::log(std::log(1.0 / gap)), 0.0);
}

}  // namespace

double lower_bound_eq2(const gap_profile& profile, std::uint32_t n, double delta) {
  check_delta(delta);
  const double log_n_delta = std::log(static_cast<double>(n) / delta);
  double sum = 0.0;
  for (double gap : profile.delta_tilde_i) {
    if (!std::isfinite(gap)) continue;
    sum += (loglog_term(gap) + log_n_delta) / (gap * gap);
  }
  return sum;
}

double eq1_inner_min(const gap_profile& profile) {
  double weight_total = 0.0;
  for (double gap : profile.delta_tilde_i)
    if (std::isfinite(gap)) weight_total += 1.0 / (gap * gap);
  if (weight_total == 0.0) return 0.0;
  double sum = 0.0;
  for (double gap : profile.delta_tilde_i) {
    if (!std::isfinite(gap)) continue;
    double w = 1.0 / (gap * gap);
    sum += w * std::log(weight_total / w);
  }
  return sum;
}

double lower_bound_eq1(const gap_profile& profile, std::uint32_t n, double delta) {
  check_delta(delta);
  (void)n;  // the per-item sum depends on delta only; n enters eq. 2
  const double log_inv_delta = std::log(1.0 / delta);
  double sum = 0.0;
  for (double gap : profile.delta_tilde_i) {
    if (!std::isfinite(gap)) continue;
    sum += (loglog_term(gap) + log_inv_delta) / (gap * gap);
  }
  return sum + eq1_inner_min(profile);
}

}  // namespace exactrank
