#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "exactrank/instance.hpp"

namespace exactrank {

/// An interval endpoint: a real item or one of the two artificial extremes.
/// neg_inf sits below every item (everything beats it) and pos_inf above
/// every item (it beats everything).
struct boundary {
  enum class kind_t : std::uint8_t { neg_inf, item, pos_inf };

  kind_t kind = kind_t::neg_inf;
  item_id id = 0;  // valid iff kind == item

  static constexpr boundary neg_inf() { return {kind_t::neg_inf, 0}; }
  static constexpr boundary pos_inf() { return {kind_t::pos_inf, 0}; }
  static constexpr boundary item(item_id i) { return {kind_t::item, i}; }

  bool is_item() const { return kind == kind_t::item; }
  bool is_neg_inf() const { return kind == kind_t::neg_inf; }
  bool is_pos_inf() const { return kind == kind_t::pos_inf; }

  friend bool operator==(const boundary&, const boundary&) = default;
};

std::string to_string(const boundary& b);

/// Arena node. Children/parent are arena indices, -1 when absent. A leaf has
/// no mid item and no children; a non-leaf's children split its interval at
/// mid: lchild = (left, mid), rchild = (mid, right).
struct pit_node {
  boundary left;
  boundary right;
  item_id mid = 0;  // 0 = absent (leaf)
  std::int32_t parent = -1;
  std::int32_t lchild = -1;
  std::int32_t rchild = -1;
  std::int32_t depth = 1;          // nodes on the path from the root, root = 1
  std::int32_t leaf_ordinal = -1;  // left-to-right position among leaves

  bool is_leaf() const { return lchild < 0; }
};

/// Preference interval tree over a sorted list S (most preferred first).
/// The |S|+1 leaves tile (-inf, +inf) left to right:
/// (-inf, last), (last, ...), ..., (first, +inf), and the depth is exactly
/// ceil(1 + log2(|S|+1)). Immutable after build.
class pit {
public:
  const pit_node& node(std::int32_t idx) const { return nodes_[idx]; }
  std::int32_t root() const { return 0; }
  std::int32_t depth() const { return depth_; }
  std::size_t size() const { return nodes_.size(); }
  std::uint32_t source_size() const { return source_size_; }

  std::size_t leaf_count() const { return leaves_.size(); }
  std::int32_t leaf(std::size_t ordinal) const { return leaves_[ordinal]; }

  /// 0-based position in the source list (most preferred first) where an
  /// item belonging to this leaf's interval gets inserted.
  std::size_t insert_position(std::int32_t leaf_idx) const;

  friend pit build_pit(std::span<const item_id> sorted);

private:
  std::int32_t build_range(std::span<const boundary> bounds, std::size_t lo,
                           std::size_t hi, std::int32_t parent, std::int32_t depth);

  std::vector<pit_node> nodes_;
  std::vector<std::int32_t> leaves_;
  std::int32_t depth_ = 0;
  std::uint32_t source_size_ = 0;
};

/// Builds the tree from `sorted` (most preferred first, no duplicates).
/// Construction bisects the leaf-interval sequence: of a node's k intervals
/// the left child takes the first ceil(k/2), and the separating boundary
/// becomes the node's mid item. Throws empty_list_error on an empty list.
pit build_pit(std::span<const item_id> sorted);

/// Test oracle: the unique leaf whose interval contains `probe`, given the
/// full true ranking (most preferred first; must cover probe and the tree's
/// items). Returns the leaf's arena index.
std::int32_t locate_interval(const pit& tree, item_id probe,
                             std::span<const item_id> true_order);

/// One line per node: `depth idx: (left, right) mid=<m> parent=<p>`, items
/// as integers, sentinels as -inf/+inf, absent fields as `-`.
std::string dump(const pit& tree);

}  // namespace exactrank
