#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "exactrank/instance.hpp"

namespace exactrank {

/// Listwise comparison accounting: one tick per merge-loop iteration, so
/// merging x items costs exactly x regardless of how the heads play out
/// (singleton head sets tick too, keeping counts trace-independent).
struct merge_counter {
  std::uint64_t listwise_comparisons = 0;
};

/// Merges sorted lists (most preferred first) by repeatedly comparing the
/// set of current heads and popping the winner. Needs at least two lists;
/// empty lists are fine. The oracle is consulted only when two or more
/// heads remain, but every iteration counts.
std::vector<item_id> listwise_merge(comparison_oracle& oracle,
                                    std::span<const std::vector<item_id>> lists,
                                    merge_counter& counter, rng_stream& rng);

/// m-way merge sort: splits into m contiguous chunks of size at most
/// ceil(|items|/m), sorts them recursively, and merges. With a noiseless
/// oracle the output is the true ranking and the comparison count for
/// n = m^t is exactly t m^t.
std::vector<item_id> listwise_merge_sort(comparison_oracle& oracle,
                                         std::span<const item_id> items,
                                         std::uint32_t m, merge_counter& counter,
                                         rng_stream& rng);

}  // namespace exactrank
