#include "exactrank/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "exactrank/errors.hpp"

namespace exactrank {

namespace {

constexpr double kHalfBand = 1e-9;   // rejected band around 1/2 (A3 strictness)
constexpr double kComplementTol = 1e-12;

std::string item_str(item_id i) { return std::to_string(i); }

}  // namespace

const char* to_string(instance_family family) {
  switch (family) {
    case instance_family::homo: return "homo";
    case instance_family::mnl: return "mnl";
    case instance_family::random_pairs: return "random";
  }
  return "?";
}

std::optional<instance_family> family_from_string(std::string_view name) {
  if (name == "homo") return instance_family::homo;
  if (name == "mnl") return instance_family::mnl;
  if (name == "random") return instance_family::random_pairs;
  return std::nullopt;
}

instance instance::from_matrix(std::uint32_t n, std::vector<double> pairwise_probs,
                               std::optional<std::vector<item_id>> true_ranking,
                               std::string seed_provenance) {
  if (n < 1) throw invalid_instance_error("instance needs at least one item");
  if (pairwise_probs.size() != static_cast<std::size_t>(n) * n)
    throw invalid_instance_error("pairwise_probs must be n*n");
  instance inst;
  inst.n_ = n;
  inst.kind_ = instance_kind::matrix;
  inst.probs_ = std::move(pairwise_probs);
  inst.provenance_ = std::move(seed_provenance);
  inst.finalize_ranking(std::move(true_ranking));
  inst.validate();
  return inst;
}

instance instance::from_scores(std::vector<double> scores,
                               std::optional<std::vector<item_id>> true_ranking,
                               std::string seed_provenance) {
  if (scores.empty()) throw invalid_instance_error("instance needs at least one item");
  instance inst;
  inst.n_ = static_cast<std::uint32_t>(scores.size());
  inst.kind_ = instance_kind::mnl;
  inst.scores_ = std::move(scores);
  inst.provenance_ = std::move(seed_provenance);
  inst.finalize_ranking(std::move(true_ranking));
  inst.validate();
  return inst;
}

void instance::finalize_ranking(std::optional<std::vector<item_id>> supplied) {
  if (supplied) {
    ranking_ = std::move(*supplied);
    has_true_ranking_ = true;
  } else {
    // Derive the ranking the probabilities imply; validate() then checks it
    // is consistent, which fails exactly when no valid ranking exists.
    ranking_.resize(n_);
    std::iota(ranking_.begin(), ranking_.end(), item_id{1});
    if (kind_ == instance_kind::mnl) {
      std::stable_sort(ranking_.begin(), ranking_.end(),
                       [&](item_id a, item_id b) { return scores_[a - 1] > scores_[b - 1]; });
    } else {
      // Under A2/A3 the row-wise win counts are n-1, n-2, ..., 0 along the
      // true ranking.
      std::vector<std::uint32_t> wins(n_, 0);
      for (item_id i = 1; i <= n_; ++i)
        for (item_id j = 1; j <= n_; ++j)
          if (i != j && probs_[(i - 1) * n_ + (j - 1)] > 0.5) ++wins[i - 1];
      std::stable_sort(ranking_.begin(), ranking_.end(),
                       [&](item_id a, item_id b) { return wins[a - 1] > wins[b - 1]; });
    }
    has_true_ranking_ = false;
  }

  if (ranking_.size() != n_)
    throw invalid_instance_error("true_ranking must list all n items");
  positions_.assign(n_, n_);
  for (std::uint32_t pos = 0; pos < n_; ++pos) {
    item_id item = ranking_[pos];
    if (item < 1 || item > n_ || positions_[item - 1] != n_)
      throw invalid_instance_error("true_ranking is not a permutation of 1..n");
    positions_[item - 1] = pos;
  }
}

void instance::validate() const {
  if (kind_ == instance_kind::mnl) {
    double total = 0.0;
    for (double s : scores_) {
      if (!(s > 0.0) || !std::isfinite(s))
        throw invalid_instance_error("mnl scores must be positive finite reals");
      total += s;
    }
    if (!std::isfinite(total))
      throw invalid_instance_error("mnl score total overflows");
    for (item_id i = 1; i <= n_; ++i) {
      for (item_id j = i + 1; j <= n_; ++j) {
        if (scores_[i - 1] == scores_[j - 1])
          throw invalid_instance_error("mnl scores must be distinct (items " +
                                       item_str(i) + ", " + item_str(j) + ")");
      }
    }
    // Ranking must equal descending score order.
    for (std::uint32_t pos = 0; pos + 1 < n_; ++pos) {
      if (scores_[ranking_[pos] - 1] <= scores_[ranking_[pos + 1] - 1])
        throw invalid_instance_error("true_ranking disagrees with descending scores");
    }
    // Implied pairwise probabilities must respect the 1/2 band too.
    for (item_id i = 1; i <= n_; ++i) {
      for (item_id j = i + 1; j <= n_; ++j) {
        double p = scores_[i - 1] / (scores_[i - 1] + scores_[j - 1]);
        if (std::abs(p - 0.5) <= kHalfBand)
          throw invalid_instance_error("implied p(" + item_str(i) + "," + item_str(j) +
                                       ") is within the rejected band around 1/2");
      }
    }
    return;
  }

  for (item_id i = 1; i <= n_; ++i) {
    for (item_id j = 1; j <= n_; ++j) {
      if (i == j) continue;
      double p = probs_[(i - 1) * n_ + (j - 1)];
      if (!std::isfinite(p) || p < 0.0 || p > 1.0)
        throw invalid_instance_error("p(" + item_str(i) + "," + item_str(j) +
                                     ") outside [0,1]");
      if (std::abs(p - 0.5) <= kHalfBand)
        throw invalid_instance_error("p(" + item_str(i) + "," + item_str(j) +
                                     ") lies in the rejected band around 1/2");
    }
  }
  for (item_id i = 1; i <= n_; ++i) {
    for (item_id j = i + 1; j <= n_; ++j) {
      double pij = probs_[(i - 1) * n_ + (j - 1)];
      double pji = probs_[(j - 1) * n_ + (i - 1)];
      if (std::abs(pij + pji - 1.0) > kComplementTol)
        throw invalid_instance_error("p(" + item_str(i) + "," + item_str(j) +
                                     ") and its complement do not sum to 1");
      bool i_precedes = positions_[i - 1] < positions_[j - 1];
      if ((pij > 0.5) != i_precedes)
        throw invalid_instance_error("p(" + item_str(i) + "," + item_str(j) +
                                     ") disagrees with the true ranking");
    }
  }
}

double instance::pairwise_prob(item_id i, item_id j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || i == j)
    throw invalid_set_error("pairwise_prob needs two distinct items in 1..n");
  if (kind_ == instance_kind::matrix) return probs_[(i - 1) * n_ + (j - 1)];
  return scores_[i - 1] / (scores_[i - 1] + scores_[j - 1]);
}

double instance::score(item_id i) const {
  if (kind_ != instance_kind::mnl)
    throw invalid_param_error("score() is only defined for mnl instances");
  if (i < 1 || i > n_) throw invalid_set_error("item out of range");
  return scores_[i - 1];
}

item_id compare(const instance& inst, oracle_stats& stats,
                std::span<const item_id> set, rng_stream& rng) {
  if (set.size() < 2) throw invalid_set_error("comparison set needs at least two items");
  for (std::size_t a = 0; a < set.size(); ++a) {
    if (set[a] < 1 || set[a] > inst.n())
      throw invalid_set_error("comparison set item out of range");
    for (std::size_t b = a + 1; b < set.size(); ++b)
      if (set[a] == set[b]) throw invalid_set_error("comparison set has duplicates");
  }

  if (set.size() == 2) {
    item_id i = set[0], j = set[1];
    stats.pairwise_calls += 1;
    stats.per_pair_calls[{std::min(i, j), std::max(i, j)}] += 1;
    return rng.bernoulli(inst.pairwise_prob(i, j)) ? i : j;
  }

  if (inst.kind() == instance_kind::matrix)
    throw listwise_unsupported_error("matrix instances only support pairwise comparisons");

  stats.listwise_calls += 1;
  double total = 0.0;
  for (item_id i : set) total += inst.score(i);
  double u = rng.next_double() * total;
  double acc = 0.0;
  for (std::size_t a = 0; a + 1 < set.size(); ++a) {
    acc += inst.score(set[a]);
    if (u < acc) return set[a];
  }
  return set.back();
}

instance generate_instance(instance_family family, std::uint32_t n, double delta,
                           rng_stream& rng, std::string seed_provenance) {
  if (n < 2) throw invalid_param_error("generate_instance needs n >= 2");
  if (family == instance_family::homo && !(delta > 0.0 && delta < 0.5))
    throw invalid_param_error("homo family needs delta in (0, 1/2)");
  if (family == instance_family::random_pairs && !(delta > 0.0 && delta < 1.0 / 3.0))
    throw invalid_param_error("random family needs delta in (0, 1/3)");

  // Hidden ranking: uniform permutation (Fisher-Yates).
  std::vector<item_id> ranking(n);
  std::iota(ranking.begin(), ranking.end(), item_id{1});
  for (std::uint32_t k = n - 1; k > 0; --k) {
    std::uint64_t swap_with = rng.next_below(k + 1);
    std::swap(ranking[k], ranking[swap_with]);
  }

  if (family == instance_family::mnl) {
    std::vector<double> scores(n);
    for (std::uint32_t pos = 0; pos < n; ++pos) {
      // rank position pos (0-based) gets scale 1.5^(n-1-pos)
      double scale = std::pow(1.5, static_cast<double>(n - 1 - pos));
      scores[ranking[pos] - 1] = rng.uniform(0.9 * scale, 1.1 * scale);
    }
    return instance::from_scores(std::move(scores), std::move(ranking),
                                 std::move(seed_provenance));
  }

  std::vector<double> probs(static_cast<std::size_t>(n) * n, 0.0);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      item_id hi = ranking[a], lo = ranking[b];  // hi preferred over lo
      double p = family == instance_family::homo
                     ? 0.5 + delta
                     : rng.uniform(0.5 + 0.8 * delta, 0.5 + 1.5 * delta);
      probs[(hi - 1) * n + (lo - 1)] = p;
      probs[(lo - 1) * n + (hi - 1)] = 1.0 - p;
    }
  }
  return instance::from_matrix(n, std::move(probs), std::move(ranking),
                               std::move(seed_provenance));
}

}  // namespace exactrank
