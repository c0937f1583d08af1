#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "exactrank/instance.hpp"
#include "exactrank/pit.hpp"

namespace exactrank {

/// Confidence-bounded pairwise duel parameters: epsilon is the guessed gap,
/// delta the per-duel error budget.
struct atc_params {
  double epsilon = 0.25;
  double delta = 0.05;
};

/// Hard cap on the duel length: ceil(log(2/delta) / (2 epsilon^2)).
std::uint64_t atc_budget(const atc_params& params);

/// Anytime deviation bound b_t = sqrt(log(pi^2 t^2 / (3 delta)) / (2t)).
double atc_deviation_bound(std::uint64_t t, double delta);

struct atc_outcome {
  bool first_wins = false;   // true when item i is declared the winner
  std::uint64_t calls = 0;   // oracle comparisons consumed
};

/// Duels item i against j for at most atc_budget() comparisons, exiting as
/// soon as the running mean leaves [1/2 - b_t, 1/2 + b_t]; afterwards the
/// empirical leader wins and an exact tie is broken with one draw from rng.
/// Duels against the artificial extremes resolve immediately with zero
/// comparisons: -inf always loses, +inf always wins.
atc_outcome atc(comparison_oracle& oracle, item_id i, boundary j,
                const atc_params& params, rng_stream& rng);

enum class ati_status { inserted, unsure };

struct ati_result {
  ati_status status = ati_status::unsure;
  std::vector<item_id> list;    // input list with i placed (when inserted)
  std::size_t position = 0;     // 0-based insert position (when inserted)
  std::uint64_t comparisons = 0;
  std::uint64_t rounds = 0;
  bool early_insert = false;    // insertion fired inside the walk
};

/// Round cap for the tree walk: ceil(max(4 h, (512/25) log(2/delta))).
std::uint64_t ati_round_cap(std::int32_t tree_depth, double delta);

/// Per-round success floor of the walk.
inline constexpr double kAtiRoundConfidence = 15.0 / 16.0;

/// Single insertion attempt with gap guess epsilon: a counter-augmented
/// random walk over the preference interval tree of `sorted`. Each round
/// duels i against the current node's mid (root), both interval endpoints
/// (leaf, counting a success when i falls inside), or endpoints-then-mid
/// (inner nodes, ascending when i falls outside). A leaf whose counter
/// clears t/2 + sqrt(t/2 log(pi^2 t^2/(3 delta))) + 1 triggers immediate
/// insertion; after the round cap, a leaf with counter >= 1 + (5/16) t_max
/// still inserts, and otherwise the attempt reports unsure rather than
/// risking a wrong placement.
ati_result ati(comparison_oracle& oracle, item_id i, std::span<const item_id> sorted,
               double epsilon, double delta, rng_stream& rng);

/// Attempt schedule: the gap guess halves while the confidence budget is
/// spread as delta_t = 6 delta / (pi^2 t^2), which sums to delta.
double iai_epsilon(std::uint32_t attempt);
double iai_delta(std::uint32_t attempt, double delta);

inline constexpr std::uint32_t kDefaultScheduleCap = 64;

struct iai_result {
  std::vector<item_id> list;
  std::uint64_t comparisons = 0;
  std::uint32_t attempts = 0;
};

/// Repeats ati with the diminishing schedule until insertion succeeds.
/// Throws schedule_exhausted_error past `schedule_cap` attempts: the guess
/// 2^-(cap+1) underflows any usable double-precision gap, so looping on is
/// pointless.
iai_result iai(comparison_oracle& oracle, item_id i, std::span<const item_id> sorted,
               double delta, std::uint32_t schedule_cap, rng_stream& rng);

struct ranking_outcome {
  std::vector<item_id> ranking;  // most preferred first
  std::uint64_t comparisons_used = 0;
  std::vector<std::uint64_t> per_item_insertion_cost;  // indexed by item-1
  bool failed = false;
  std::string failure_reason;
};

/// Full ranking by iterative insertion: items 2..n are inserted one by one
/// into the growing answer, each with confidence delta/(n-1).
/// Propagates schedule_exhausted_error.
ranking_outcome iir(comparison_oracle& oracle, std::uint32_t n, double delta,
                    rng_stream& rng, std::uint32_t schedule_cap = kDefaultScheduleCap);

}  // namespace exactrank
