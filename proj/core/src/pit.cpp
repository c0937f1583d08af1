#include "exactrank/pit.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "exactrank/errors.hpp"

namespace exactrank {

std::string to_string(const boundary& b) {
  switch (b.kind) {
    case boundary::kind_t::neg_inf: return "-inf";
    case boundary::kind_t::pos_inf: return "+inf";
    case boundary::kind_t::item: return std::to_string(b.id);
  }
  return "?";
}

std::size_t pit::insert_position(std::int32_t leaf_idx) const {
  return source_size_ - static_cast<std::size_t>(nodes_[leaf_idx].leaf_ordinal);
}

std::int32_t pit::build_range(std::span<const boundary> bounds, std::size_t lo,
                              std::size_t hi, std::int32_t parent,
                              std::int32_t depth) {
  // [lo, hi) indexes leaf intervals; interval k spans (bounds[k], bounds[k+1]).
  const std::int32_t idx = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back({});
  nodes_[idx].left = bounds[lo];
  nodes_[idx].right = bounds[hi];
  nodes_[idx].parent = parent;
  nodes_[idx].depth = depth;
  depth_ = std::max(depth_, depth);

  const std::size_t count = hi - lo;
  if (count == 1) {
    nodes_[idx].leaf_ordinal = static_cast<std::int32_t>(leaves_.size());
    leaves_.push_back(idx);
    return idx;
  }

  const std::size_t split = lo + (count + 1) / 2;  // left child takes ceil(k/2)
  nodes_[idx].mid = bounds[split].id;
  const std::int32_t lchild = build_range(bounds, lo, split, idx, depth + 1);
  const std::int32_t rchild = build_range(bounds, split, hi, idx, depth + 1);
  nodes_[idx].lchild = lchild;
  nodes_[idx].rchild = rchild;
  return idx;
}

pit build_pit(std::span<const item_id> sorted) {
  if (sorted.empty()) throw empty_list_error("cannot build a tree from an empty list");
  {
    std::unordered_set<item_id> seen(sorted.begin(), sorted.end());
    if (seen.size() != sorted.size())
      throw invalid_set_error("sorted list has duplicate items");
  }

  // Ascending boundary sequence: -inf, r_l, r_{l-1}, ..., r_1, +inf.
  std::vector<boundary> bounds;
  bounds.reserve(sorted.size() + 2);
  bounds.push_back(boundary::neg_inf());
  for (std::size_t k = sorted.size(); k-- > 0;) bounds.push_back(boundary::item(sorted[k]));
  bounds.push_back(boundary::pos_inf());

  pit tree;
  tree.source_size_ = static_cast<std::uint32_t>(sorted.size());
  tree.nodes_.reserve(2 * sorted.size() + 1);
  tree.build_range(bounds, 0, bounds.size() - 1, -1, 1);
  return tree;
}

namespace {

// Preference key: smaller = more preferred. pos_inf beats every item and
// neg_inf loses to every item.
std::int64_t preference_key(const boundary& b,
                            std::span<const std::int64_t> position_of,
                            std::int64_t n_items) {
  switch (b.kind) {
    case boundary::kind_t::pos_inf: return -1;
    case boundary::kind_t::neg_inf: return n_items;
    case boundary::kind_t::item: return position_of[b.id - 1];
  }
  return n_items;
}

}  // namespace

std::int32_t locate_interval(const pit& tree, item_id probe,
                             std::span<const item_id> true_order) {
  item_id max_item = probe;
  for (item_id it : true_order) max_item = std::max(max_item, it);
  std::vector<std::int64_t> position_of(max_item, -1);
  for (std::size_t pos = 0; pos < true_order.size(); ++pos)
    position_of[true_order[pos] - 1] = static_cast<std::int64_t>(pos);
  if (position_of[probe - 1] < 0)
    throw invalid_set_error("probe item missing from the true order");

  const std::int64_t n_items = static_cast<std::int64_t>(true_order.size());
  const std::int64_t probe_key = position_of[probe - 1];
  std::int32_t idx = tree.root();
  while (!tree.node(idx).is_leaf()) {
    const pit_node& u = tree.node(idx);
    std::int64_t mid_key = preference_key(boundary::item(u.mid), position_of, n_items);
    idx = probe_key < mid_key ? u.rchild : u.lchild;
  }
  return idx;
}

std::string dump(const pit& tree) {
  std::ostringstream out;
  for (std::size_t idx = 0; idx < tree.size(); ++idx) {
    const pit_node& u = tree.node(static_cast<std::int32_t>(idx));
    out << u.depth << ' ' << idx << ": (" << to_string(u.left) << ", "
        << to_string(u.right) << ") mid=";
    if (u.mid != 0)
      out << u.mid;
    else
      out << '-';
    out << " parent=";
    if (u.parent >= 0)
      out << u.parent;
    else
      out << '-';
    out << '\n';
  }
  return out.str();
}

}  // namespace exactrank
