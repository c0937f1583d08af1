#include "exactrank/listwise.hpp"

#include <algorithm>

#include "exactrank/errors.hpp"

namespace exactrank {

std::vector<item_id> listwise_merge(comparison_oracle& oracle,
                                    std::span<const std::vector<item_id>> lists,
                                    merge_counter& counter, rng_stream& rng) {
  if (lists.size() < 2) throw invalid_param_error("listwise_merge needs m >= 2 lists");

  std::vector<std::size_t> heads(lists.size(), 0);
  std::size_t remaining = 0;
  for (const auto& list : lists) remaining += list.size();

  std::vector<item_id> merged;
  merged.reserve(remaining);
  std::vector<item_id> head_set;
  head_set.reserve(lists.size());

  while (remaining > 0) {
    head_set.clear();
    for (std::size_t k = 0; k < lists.size(); ++k)
      if (heads[k] < lists[k].size()) head_set.push_back(lists[k][heads[k]]);

    counter.listwise_comparisons += 1;
    item_id winner = head_set.size() == 1 ? head_set[0] : oracle.compare(head_set, rng);

    for (std::size_t k = 0; k < lists.size(); ++k) {
      if (heads[k] < lists[k].size() && lists[k][heads[k]] == winner) {
        heads[k] += 1;
        break;
      }
    }
    merged.push_back(winner);
    remaining -= 1;
  }
  return merged;
}

std::vector<item_id> listwise_merge_sort(comparison_oracle& oracle,
                                         std::span<const item_id> items,
                                         std::uint32_t m, merge_counter& counter,
                                         rng_stream& rng) {
  if (m < 2) throw invalid_param_error("listwise_merge_sort needs m >= 2");
  if (items.size() <= 1) return {items.begin(), items.end()};

  const std::size_t chunk = (items.size() + m - 1) / m;  // ceil(|S|/m)
  std::vector<std::vector<item_id>> parts(m);
  for (std::uint32_t k = 0; k < m; ++k) {
    const std::size_t lo = std::min<std::size_t>(static_cast<std::size_t>(k) * chunk,
                                                 items.size());
    const std::size_t hi = std::min(lo + chunk, items.size());
    parts[k] = listwise_merge_sort(oracle, items.subspan(lo, hi - lo), m, counter, rng);
  }
  return listwise_merge(oracle, parts, counter, rng);
}

}  // namespace exactrank
