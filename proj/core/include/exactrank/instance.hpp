#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "exactrank/rng.hpp"

namespace exactrank {

/// Items are 1-based indices into an instance.
using item_id = std::uint32_t;

enum class instance_kind { matrix, mnl };

/// Generator families for synthetic instances.
enum class instance_family { homo, mnl, random_pairs };

const char* to_string(instance_family family);
std::optional<instance_family> family_from_string(std::string_view name);

/// A ranking instance: the hidden true ranking plus the comparison
/// probabilities that drive the oracle. Immutable after construction and
/// safe to share across threads.
///
/// Construction validates eagerly:
///   - matrix: p(i,j) + p(j,i) = 1 within 1e-12; |p(i,j) - 1/2| > 1e-9
///     (ties at 1/2 are rejected, including a numerical band around it);
///     p(i,j) > 1/2 exactly when i precedes j in the true ranking.
///   - mnl: all scores positive and distinct; the true ranking is the
///     descending score order; implied pairwise probabilities stay outside
///     the 1/2 band.
/// A missing true ranking is derived from the probabilities (it is unique
/// under the above constraints); `has_true_ranking` records whether the
/// ranking was externally supplied, which is what entitles a consumer to
/// report correctness against it.
class instance {
public:
  /// `pairwise_probs` is row-major n*n; entry (i,j) at [(i-1)*n + (j-1)].
  static instance from_matrix(std::uint32_t n, std::vector<double> pairwise_probs,
                              std::optional<std::vector<item_id>> true_ranking,
                              std::string seed_provenance = {});

  static instance from_scores(std::vector<double> scores,
                              std::optional<std::vector<item_id>> true_ranking,
                              std::string seed_provenance = {});

  std::uint32_t n() const noexcept { return n_; }
  instance_kind kind() const noexcept { return kind_; }

  /// Probability that i wins a pairwise comparison against j. For mnl
  /// instances this is score(i) / (score(i) + score(j)).
  double pairwise_prob(item_id i, item_id j) const;

  /// mnl only.
  double score(item_id i) const;
  std::span<const double> scores() const noexcept { return scores_; }
  std::span<const double> matrix() const noexcept { return probs_; }

  std::span<const item_id> true_ranking() const noexcept { return ranking_; }
  bool has_true_ranking() const noexcept { return has_true_ranking_; }

  /// Position of item i in the true ranking: 0 = most preferred.
  std::uint32_t rank_position(item_id i) const { return positions_[i - 1]; }

  const std::string& seed_provenance() const noexcept { return provenance_; }

private:
  instance() = default;
  void finalize_ranking(std::optional<std::vector<item_id>> supplied);
  void validate() const;

  std::uint32_t n_ = 0;
  instance_kind kind_ = instance_kind::matrix;
  std::vector<double> probs_;   // matrix kind, row-major n*n
  std::vector<double> scores_;  // mnl kind
  std::vector<item_id> ranking_;
  std::vector<std::uint32_t> positions_;
  bool has_true_ranking_ = false;
  std::string provenance_;
};

/// Comparison accounting for one trial. Counters only move forward; reset
/// between trials by replacing the object.
struct oracle_stats {
  std::uint64_t pairwise_calls = 0;
  std::uint64_t listwise_calls = 0;
  /// (min(i,j), max(i,j)) -> number of pairwise comparisons of that pair.
  std::map<std::pair<item_id, item_id>, std::uint64_t> per_pair_calls;

  std::uint64_t total_calls() const noexcept {
    return pairwise_calls + listwise_calls;
  }
};

/// Samples a winner from `set` with probability p(i, set) and counts the
/// call in `stats`. Matrix instances support only |set| = 2
/// (listwise_unsupported_error otherwise); mnl instances accept any size.
/// Duplicates or out-of-range items raise invalid_set_error.
item_id compare(const instance& inst, oracle_stats& stats,
                std::span<const item_id> set, rng_stream& rng);

/// The capability handed to ranking algorithms: they can ask for noisy
/// winners but can never see probabilities or the true ranking.
class comparison_oracle {
public:
  virtual ~comparison_oracle() = default;
  virtual item_id compare(std::span<const item_id> set, rng_stream& rng) = 0;
};

/// comparison_oracle backed by an instance with per-trial stats.
class instance_oracle final : public comparison_oracle {
public:
  instance_oracle(const instance& inst, oracle_stats& stats) noexcept
      : inst_(&inst), stats_(&stats) {}

  item_id compare(std::span<const item_id> set, rng_stream& rng) override {
    return exactrank::compare(*inst_, *stats_, set, rng);
  }

private:
  const instance* inst_;
  oracle_stats* stats_;
};

/// Synthesizes an instance of the given family with a uniformly random
/// hidden ranking.
///   homo:         p(r_i, r_j) = 1/2 + delta for every i < j
///   mnl:          score(r_i) ~ Uniform[0.9 * 1.5^(n-i), 1.1 * 1.5^(n-i)]
///                 (delta is ignored)
///   random_pairs: p(r_i, r_j) ~ Uniform[0.5 + 0.8 delta, 0.5 + 1.5 delta]
///                 per pair i < j, complements fill the lower triangle
/// delta must lie in (0, 1/2) for homo and (0, 1/3) for random_pairs so
/// every probability stays inside (0, 1).
instance generate_instance(instance_family family, std::uint32_t n, double delta,
                           rng_stream& rng, std::string seed_provenance = {});

/// Instance JSON, schema:
///   {"n": int, "kind": "matrix"|"mnl", "true_ranking": [int],
///    "pairwise_probs": [[float]] | null, "scores": [float] | null,
///    "seed_provenance": string}
/// Probabilities and scores are written with 17 significant digits so the
/// file round-trips doubles exactly. The writer's byte output is
/// deterministic for a given instance.
void write_instance_json(std::ostream& out, const instance& inst);
std::string instance_to_json(const instance& inst);
instance instance_from_json(const std::string& text);
instance load_instance(const std::string& path);

}  // namespace exactrank
