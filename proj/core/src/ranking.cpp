#include "exactrank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "exactrank/errors.hpp"

namespace exactrank {

namespace {

constexpr double kPiSq = std::numbers::pi * std::numbers::pi;

void check_atc_params(const atc_params& p) {
  if (!(p.epsilon > 0.0 && p.epsilon <= 0.5))
    throw invalid_param_error("atc epsilon must lie in (0, 1/2]");
  if (!(p.delta > 0.0 && p.delta < 1.0))
    throw invalid_param_error("atc delta must lie in (0, 1)");
}

}  // namespace

std::uint64_t atc_budget(const atc_params& params) {
  check_atc_params(params);
  return static_cast<std::uint64_t>(
      std::ceil(std::log(2.0 / params.delta) / (2.0 * params.epsilon * params.epsilon)));
}

double atc_deviation_bound(std::uint64_t t, double delta) {
  const double td = static_cast<double>(t);
  return std::sqrt(std::log(kPiSq * td * td / (3.0 * delta)) / (2.0 * td));
}

atc_outcome atc(comparison_oracle& oracle, item_id i, boundary j,
                const atc_params& params, rng_stream& rng) {
  check_atc_params(params);
  // The extremes are bookkeeping items: their duels are deterministic and
  // cost no comparisons.
  if (j.is_neg_inf()) return {true, 0};
  if (j.is_pos_inf()) return {false, 0};
  if (j.id == i) throw invalid_set_error("atc needs two distinct items");

  const std::uint64_t budget = atc_budget(params);
  const double log_base = std::log(kPiSq / (3.0 * params.delta));
  const item_id pair[2] = {i, j.id};

  std::uint64_t wins = 0;
  for (std::uint64_t t = 1; t <= budget; ++t) {
    if (oracle.compare(pair, rng) == i) ++wins;
    const double td = static_cast<double>(t);
    const double log_term = log_base + 2.0 * std::log(td);
    // No exit is possible while b_t >= 1/2; skip the sqrt until it matters.
    if (log_term < 0.5 * td) {
      const double bt = std::sqrt(log_term / (2.0 * td));
      const double centered = static_cast<double>(wins) / td - 0.5;
      if (centered > bt) return {true, t};
      if (centered < -bt) return {false, t};
    }
  }
  if (2 * wins > budget) return {true, budget};
  if (2 * wins < budget) return {false, budget};
  return {rng.next_below(2) == 0, budget};  // exact tie: uniform pick
}

std::uint64_t ati_round_cap(std::int32_t tree_depth, double delta) {
  return static_cast<std::uint64_t>(std::ceil(
      std::max(4.0 * tree_depth, (512.0 / 25.0) * std::log(2.0 / delta))));
}

ati_result ati(comparison_oracle& oracle, item_id i, std::span<const item_id> sorted,
               double epsilon, double delta, rng_stream& rng) {
  if (!(delta > 0.0 && delta < 1.0))
    throw invalid_param_error("ati delta must lie in (0, 1)");
  if (std::find(sorted.begin(), sorted.end(), i) != sorted.end())
    throw invalid_set_error("item to insert is already in the list");

  const pit tree = build_pit(sorted);
  const std::uint64_t t_max = ati_round_cap(tree.depth(), delta);

  const double q = kAtiRoundConfidence;
  const atc_params root_params{epsilon, 1.0 - q};
  const atc_params leaf_params{epsilon, 1.0 - std::sqrt(q)};
  const atc_params inner_params{epsilon, 1.0 - std::cbrt(q)};
  const double leaf_log_base = std::log(kPiSq / (3.0 * delta));

  std::vector<std::uint64_t> counters(tree.leaf_count(), 0);
  std::int32_t cursor = tree.root();

  ati_result result;

  auto insert_at = [&](std::int32_t leaf_idx, bool early) {
    result.status = ati_status::inserted;
    result.position = tree.insert_position(leaf_idx);
    result.early_insert = early;
    result.list.assign(sorted.begin(), sorted.end());
    result.list.insert(result.list.begin() + static_cast<std::ptrdiff_t>(result.position), i);
  };

  for (std::uint64_t t = 1; t <= t_max; ++t) {
    result.rounds = t;
    const pit_node& u = tree.node(cursor);

    if (cursor == tree.root()) {
      auto duel = atc(oracle, i, boundary::item(u.mid), root_params, rng);
      result.comparisons += duel.calls;
      cursor = duel.first_wins ? u.rchild : u.lchild;
      continue;
    }

    if (u.is_leaf()) {
      auto left = atc(oracle, i, u.left, leaf_params, rng);
      result.comparisons += left.calls;
      bool inside = false;
      if (left.first_wins) {
        auto right = atc(oracle, i, u.right, leaf_params, rng);
        result.comparisons += right.calls;
        inside = !right.first_wins;  // the right endpoint beat i
      }
      if (inside) {
        std::uint64_t& c = counters[u.leaf_ordinal];
        c += 1;
        const double td = static_cast<double>(t);
        const double threshold =
            0.5 * td + std::sqrt(0.5 * td * (leaf_log_base + 2.0 * std::log(td))) + 1.0;
        if (static_cast<double>(c) > threshold) {
          insert_at(cursor, true);
          return result;
        }
      } else if (counters[u.leaf_ordinal] > 0) {
        counters[u.leaf_ordinal] -= 1;
      } else {
        cursor = u.parent;
      }
      continue;
    }

    // Inner node: check the endpoints first and back out if i falls outside.
    auto left = atc(oracle, i, u.left, inner_params, rng);
    result.comparisons += left.calls;
    if (!left.first_wins) {
      cursor = u.parent;
      continue;
    }
    auto right = atc(oracle, i, u.right, inner_params, rng);
    result.comparisons += right.calls;
    if (right.first_wins) {
      cursor = u.parent;
      continue;
    }
    auto mid = atc(oracle, i, boundary::item(u.mid), inner_params, rng);
    result.comparisons += mid.calls;
    cursor = mid.first_wins ? u.rchild : u.lchild;
  }

  // Post-walk insertion: a leaf counted at least 1 + (5/16) t_max times.
  const double final_threshold = 1.0 + (5.0 / 16.0) * static_cast<double>(t_max);
  std::int32_t best_leaf = -1;
  std::uint64_t best_count = 0;
  for (std::size_t ord = 0; ord < counters.size(); ++ord) {
    if (static_cast<double>(counters[ord]) >= final_threshold &&
        counters[ord] > best_count) {
      best_count = counters[ord];
      best_leaf = tree.leaf(ord);
    }
  }
  if (best_leaf >= 0) {
    insert_at(best_leaf, false);
    return result;
  }
  result.status = ati_status::unsure;
  return result;
}

double iai_epsilon(std::uint32_t attempt) {
  return std::exp2(-static_cast<double>(attempt) - 1.0);
}

double iai_delta(std::uint32_t attempt, double delta) {
  const double a = static_cast<double>(attempt);
  return 6.0 * delta / (kPiSq * a * a);
}

iai_result iai(comparison_oracle& oracle, item_id i, std::span<const item_id> sorted,
               double delta, std::uint32_t schedule_cap, rng_stream& rng) {
  if (!(delta > 0.0 && delta < 1.0))
    throw invalid_param_error("iai delta must lie in (0, 1)");

  iai_result result;
  for (std::uint32_t attempt = 1; attempt <= schedule_cap; ++attempt) {
    auto attempt_result =
        ati(oracle, i, sorted, iai_epsilon(attempt), iai_delta(attempt, delta), rng);
    result.comparisons += attempt_result.comparisons;
    if (attempt_result.status == ati_status::inserted) {
      result.list = std::move(attempt_result.list);
      result.attempts = attempt;
      return result;
    }
  }
  throw schedule_exhausted_error(
      "insertion schedule exhausted after " + std::to_string(schedule_cap) +
      " attempts; the instance gap is below 2^-" + std::to_string(schedule_cap + 1));
}

ranking_outcome iir(comparison_oracle& oracle, std::uint32_t n, double delta,
                    rng_stream& rng, std::uint32_t schedule_cap) {
  if (n < 1) throw invalid_param_error("iir needs n >= 1");
  if (!(delta > 0.0 && delta < 1.0))
    throw invalid_param_error("iir delta must lie in (0, 1)");

  ranking_outcome outcome;
  outcome.per_item_insertion_cost.assign(n, 0);
  outcome.ranking = {item_id{1}};
  if (n == 1) return outcome;

  const double per_item_delta = delta / static_cast<double>(n - 1);
  for (item_id next = 2; next <= n; ++next) {
    auto inserted = iai(oracle, next, outcome.ranking, per_item_delta, schedule_cap, rng);
    outcome.ranking = std::move(inserted.list);
    outcome.per_item_insertion_cost[next - 1] = inserted.comparisons;
    outcome.comparisons_used += inserted.comparisons;
  }
  return outcome;
}

}  // namespace exactrank
