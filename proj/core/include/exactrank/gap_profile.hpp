#pragma once

#include <cstdint>
#include <vector>

#include "exactrank/instance.hpp"

namespace exactrank {

/// Pairwise gaps and transitivity diagnostics of an instance.
///
/// delta_pair(i,j) = |p(i,j) - 1/2|; delta_i minimizes over all partners,
/// delta_tilde_i only over the items adjacent to i in the true ranking (the
/// extremes have a single adjacent neighbor). Entries are symmetric and the
/// diagonal is 0 by convention. For n = 1 the per-item vectors hold +inf
/// (minimum over an empty partner set).
struct gap_profile {
  std::uint32_t n = 0;
  std::vector<double> delta_pair;     // row-major n*n
  std::vector<double> delta_i;        // length n, indexed by item-1
  std::vector<double> delta_tilde_i;  // length n, indexed by item-1
  bool sst_holds = false;
  bool sti_holds = false;

  double pair(item_id i, item_id j) const {
    return delta_pair[static_cast<std::size_t>(i - 1) * n + (j - 1)];
  }
};

/// Computes all gaps and evaluates SST / STI by exhaustive check over every
/// ranked triple i > j > k (preference order).
gap_profile compute_gap_profile(const instance& inst);

}  // namespace exactrank
