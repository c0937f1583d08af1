#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "exactrank/errors.hpp"
#include "exactrank/pit.hpp"
#include "exactrank/rng.hpp"

using namespace exactrank;

namespace {

std::int32_t expected_depth(std::size_t list_size) {
  return static_cast<std::int32_t>(
      std::ceil(1.0 + std::log2(static_cast<double>(list_size) + 1.0)));
}

// Structural invariants of every node, checked exhaustively.
void check_structure(const pit& tree) {
  std::size_t leaf_seen = 0;
  for (std::size_t idx = 0; idx < tree.size(); ++idx) {
    const auto& u = tree.node(static_cast<std::int32_t>(idx));
    CHECK(u.depth <= tree.depth());
    if (u.is_leaf()) {
      CHECK(u.mid == 0);
      CHECK(u.rchild < 0);
      ++leaf_seen;
      continue;
    }
    const auto& lc = tree.node(u.lchild);
    const auto& rc = tree.node(u.rchild);
    CHECK(u.mid != 0);
    CHECK(lc.left == u.left);
    CHECK(rc.right == u.right);
    CHECK(lc.right == boundary::item(u.mid));
    CHECK(rc.left == boundary::item(u.mid));
    CHECK(lc.parent == static_cast<std::int32_t>(idx));
    CHECK(rc.parent == static_cast<std::int32_t>(idx));
    CHECK(lc.depth == u.depth + 1);
    CHECK(rc.depth == u.depth + 1);
  }
  CHECK(leaf_seen == tree.leaf_count());

  // Leaves tile (-inf, +inf) left to right with shared endpoints.
  CHECK(tree.node(tree.leaf(0)).left == boundary::neg_inf());
  CHECK(tree.node(tree.leaf(tree.leaf_count() - 1)).right == boundary::pos_inf());
  for (std::size_t k = 0; k + 1 < tree.leaf_count(); ++k)
    CHECK(tree.node(tree.leaf(k)).right == tree.node(tree.leaf(k + 1)).left);
}

// Independent locate oracle: linear scan over the leaves using rank keys.
std::int32_t scan_for_leaf(const pit& tree, item_id probe,
                           std::span<const item_id> true_order) {
  auto key = [&](const boundary& b) -> std::int64_t {
    if (b.is_pos_inf()) return -1;
    if (b.is_neg_inf()) return static_cast<std::int64_t>(true_order.size());
    auto it = std::find(true_order.begin(), true_order.end(), b.id);
    return it - true_order.begin();
  };
  const std::int64_t probe_key = key(boundary::item(probe));
  for (std::size_t k = 0; k < tree.leaf_count(); ++k) {
    const auto& u = tree.node(tree.leaf(k));
    if (key(u.right) < probe_key && probe_key < key(u.left)) return tree.leaf(k);
  }
  return -1;
}

}  // namespace

TEST_CASE("three-item tree matches the reference shape node for node") {
  // sorted list 3 > 2 > 1 (3 most preferred)
  std::vector<item_id> sorted = {3, 2, 1};
  auto tree = build_pit(sorted);

  CHECK(tree.depth() == 3);
  CHECK(tree.size() == 7);
  REQUIRE(tree.leaf_count() == 4);

  const auto& root = tree.node(tree.root());
  CHECK(root.left == boundary::neg_inf());
  CHECK(root.right == boundary::pos_inf());
  CHECK(root.mid == 2);

  const auto& lc = tree.node(root.lchild);
  CHECK(lc.left == boundary::neg_inf());
  CHECK(lc.right == boundary::item(2));
  CHECK(lc.mid == 1);

  const auto& rc = tree.node(root.rchild);
  CHECK(rc.left == boundary::item(2));
  CHECK(rc.right == boundary::pos_inf());
  CHECK(rc.mid == 3);

  // leaves left to right: (-inf,1), (1,2), (2,3), (3,+inf)
  const boundary expected[4][2] = {
      {boundary::neg_inf(), boundary::item(1)},
      {boundary::item(1), boundary::item(2)},
      {boundary::item(2), boundary::item(3)},
      {boundary::item(3), boundary::pos_inf()},
  };
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& leaf = tree.node(tree.leaf(k));
    CHECK(leaf.left == expected[k][0]);
    CHECK(leaf.right == expected[k][1]);
    CHECK(leaf.is_leaf());
  }
  check_structure(tree);
}

TEST_CASE("singleton tree is the minimal two-leaf tree") {
  std::vector<item_id> sorted = {1};
  auto tree = build_pit(sorted);
  CHECK(tree.depth() == 2);
  CHECK(expected_depth(1) == 2);
  REQUIRE(tree.leaf_count() == 2);
  CHECK(tree.node(tree.root()).mid == 1);
  CHECK(tree.node(tree.leaf(0)).left == boundary::neg_inf());
  CHECK(tree.node(tree.leaf(0)).right == boundary::item(1));
  CHECK(tree.node(tree.leaf(1)).left == boundary::item(1));
  CHECK(tree.node(tree.leaf(1)).right == boundary::pos_inf());
  check_structure(tree);
}

TEST_CASE("seven items give eight leaves at depth four") {
  std::vector<item_id> sorted(7);
  std::iota(sorted.begin(), sorted.end(), item_id{1});
  std::reverse(sorted.begin(), sorted.end());
  auto tree = build_pit(sorted);
  CHECK(tree.leaf_count() == 8);
  CHECK(tree.depth() == 4);
  CHECK(tree.size() == 15);  // full binary tree over 8 leaves
  check_structure(tree);
}

TEST_CASE("depth formula and tiling hold for every size up to 1024") {
  for (std::size_t size = 1; size <= 1024; ++size) {
    std::vector<item_id> sorted(size);
    std::iota(sorted.begin(), sorted.end(), item_id{1});
    auto tree = build_pit(sorted);
    REQUIRE(tree.depth() == expected_depth(size));
    REQUIRE(tree.leaf_count() == size + 1);
    if (size <= 64) check_structure(tree);
  }
}

TEST_CASE("depth formula holds at larger spot-checked sizes") {
  rng_stream rng(7);
  std::vector<std::size_t> sizes = {2047, 2048, 4095, 8191, 16384, 65535, 65536};
  for (int k = 0; k < 6; ++k) sizes.push_back(1025 + rng.next_below(60000));
  for (std::size_t size : sizes) {
    std::vector<item_id> sorted(size);
    std::iota(sorted.begin(), sorted.end(), item_id{1});
    auto tree = build_pit(sorted);
    CHECK(tree.depth() == expected_depth(size));
    CHECK(tree.leaf_count() == size + 1);
  }
}

TEST_CASE("build rejects bad input and never reorders good input") {
  std::vector<item_id> empty;
  CHECK_THROWS_AS(build_pit(empty), empty_list_error);
  std::vector<item_id> dup = {1, 2, 1};
  CHECK_THROWS_AS(build_pit(dup), invalid_set_error);

  // leaf boundaries read back the input order, reversed, between sentinels
  std::vector<item_id> sorted = {5, 9, 2, 7};
  auto tree = build_pit(sorted);
  std::vector<item_id> from_leaves;
  for (std::size_t k = 0; k + 1 < tree.leaf_count(); ++k)
    from_leaves.push_back(tree.node(tree.leaf(k)).right.id);
  std::reverse(from_leaves.begin(), from_leaves.end());
  CHECK(from_leaves == sorted);
}

TEST_CASE("locate_interval on the three-item tree") {
  std::vector<item_id> sorted = {3, 2, 1};  // over items {1,2,3}
  auto tree = build_pit(sorted);

  SUBCASE("probe between 2 and 3") {
    std::vector<item_id> order = {3, 4, 2, 1};  // 4 sits between 3 and 2
    auto leaf = locate_interval(tree, 4, order);
    CHECK(tree.node(leaf).left == boundary::item(2));
    CHECK(tree.node(leaf).right == boundary::item(3));
    CHECK(tree.insert_position(leaf) == 1);
  }
  SUBCASE("probe more preferred than everything") {
    std::vector<item_id> order = {4, 3, 2, 1};
    auto leaf = locate_interval(tree, 4, order);
    CHECK(tree.node(leaf).left == boundary::item(3));
    CHECK(tree.node(leaf).right == boundary::pos_inf());
    CHECK(tree.insert_position(leaf) == 0);
  }
  SUBCASE("probe less preferred than everything") {
    std::vector<item_id> order = {3, 2, 1, 4};
    auto leaf = locate_interval(tree, 4, order);
    CHECK(tree.node(leaf).left == boundary::neg_inf());
    CHECK(tree.node(leaf).right == boundary::item(1));
    CHECK(tree.insert_position(leaf) == 3);
  }
}

TEST_CASE("locate_interval agrees with a brute-force leaf scan") {
  // 16 items; each in turn is withheld and probed against the other 15.
  const std::uint32_t n = 16;
  rng_stream rng(55);
  std::vector<item_id> order(n);
  std::iota(order.begin(), order.end(), item_id{1});
  for (std::uint32_t k = n - 1; k > 0; --k)
    std::swap(order[k], order[rng.next_below(k + 1)]);

  for (std::uint32_t withheld = 0; withheld < n; ++withheld) {
    std::vector<item_id> sorted;
    for (std::uint32_t pos = 0; pos < n; ++pos)
      if (pos != withheld) sorted.push_back(order[pos]);
    auto tree = build_pit(sorted);
    item_id probe = order[withheld];
    CHECK(locate_interval(tree, probe, order) == scan_for_leaf(tree, probe, order));
  }
}

TEST_CASE("dump emits one line per node in the documented format") {
  std::vector<item_id> sorted = {1};
  auto text = dump(build_pit(sorted));
  CHECK(text ==
        "1 0: (-inf, +inf) mid=1 parent=-\n"
        "2 1: (-inf, 1) mid=- parent=0\n"
        "2 2: (1, +inf) mid=- parent=0\n");
}
