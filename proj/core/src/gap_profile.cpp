#include "exactrank/gap_profile.hpp"

#include <cmath>
#include <limits>

namespace exactrank {

namespace {
// Slack for the triple checks: mnl probabilities are computed from scores
// and can sit a few ulps off the exact relation.
constexpr double kTripleTol = 1e-12;
}  // namespace

gap_profile compute_gap_profile(const instance& inst) {
  const std::uint32_t n = inst.n();
  gap_profile prof;
  prof.n = n;
  prof.delta_pair.assign(static_cast<std::size_t>(n) * n, 0.0);
  prof.delta_i.assign(n, std::numeric_limits<double>::infinity());
  prof.delta_tilde_i.assign(n, std::numeric_limits<double>::infinity());

  for (item_id i = 1; i <= n; ++i) {
    for (item_id j = i + 1; j <= n; ++j) {
      double gap = std::abs(inst.pairwise_prob(i, j) - 0.5);
      prof.delta_pair[static_cast<std::size_t>(i - 1) * n + (j - 1)] = gap;
      prof.delta_pair[static_cast<std::size_t>(j - 1) * n + (i - 1)] = gap;
      prof.delta_i[i - 1] = std::min(prof.delta_i[i - 1], gap);
      prof.delta_i[j - 1] = std::min(prof.delta_i[j - 1], gap);
    }
  }

  // Adjacent gaps along the true ranking.
  auto ranking = inst.true_ranking();
  for (std::uint32_t pos = 0; pos + 1 < n; ++pos) {
    item_id a = ranking[pos], b = ranking[pos + 1];
    double gap = prof.pair(a, b);
    prof.delta_tilde_i[a - 1] = std::min(prof.delta_tilde_i[a - 1], gap);
    prof.delta_tilde_i[b - 1] = std::min(prof.delta_tilde_i[b - 1], gap);
  }

  prof.sst_holds = true;
  prof.sti_holds = true;
  for (std::uint32_t a = 0; a < n && (prof.sst_holds || prof.sti_holds); ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      for (std::uint32_t c = b + 1; c < n; ++c) {
        item_id i = ranking[a], j = ranking[b], k = ranking[c];
        double p_ik = inst.pairwise_prob(i, k);
        double p_ij = inst.pairwise_prob(i, j);
        double p_jk = inst.pairwise_prob(j, k);
        if (p_ik + kTripleTol < std::max(p_ij, p_jk)) prof.sst_holds = false;
        double d_ik = prof.pair(i, k);
        if (d_ik > prof.pair(i, j) + prof.pair(j, k) + kTripleTol)
          prof.sti_holds = false;
      }
    }
  }
  return prof;
}

}  // namespace exactrank
