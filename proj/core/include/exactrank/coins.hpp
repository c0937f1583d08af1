#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "exactrank/rng.hpp"

namespace exactrank {

/// Outcome of a coin-to-comparison reduction: which input coin produced the
/// first head and how many tosses it took to get there.
struct coin_flip_result {
  std::size_t winner = 0;  // index into the input coins
  std::uint64_t tosses = 0;
};

/// Two-coin reduction: repeatedly pick one of the two coins uniformly and
/// toss it until a head appears; that coin wins. The winner is the first
/// coin with probability mu_first / (mu_first + mu_second), and the toss
/// count is geometric with mean 2 / (mu_first + mu_second).
/// Head probabilities must lie in (0, 1].
coin_flip_result coin_reduction_compare(double mu_first, double mu_second,
                                        rng_stream& rng);

/// m-coin generalization: winner i with probability mu_i / sum_j mu_j,
/// expected tosses m / sum_j mu_j. Needs at least two coins.
coin_flip_result coin_reduction_compare_listwise(std::span<const double> mus,
                                                 rng_stream& rng);

}  // namespace exactrank
