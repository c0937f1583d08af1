#include <doctest.h>

#include <cmath>
#include <vector>

#include "exactrank/coins.hpp"
#include "exactrank/errors.hpp"

using namespace exactrank;

TEST_CASE("two-coin reduction: winner frequency matches mu_i/(mu_i+mu_j)") {
  rng_stream rng(17);
  const int n = 100000;
  int first_wins = 0;
  for (int k = 0; k < n; ++k)
    first_wins += coin_reduction_compare(0.3, 0.1, rng).winner == 0;
  const double p = 0.75;  // 0.3 / 0.4
  double sigma = std::sqrt(p * (1 - p) / n);
  CHECK(std::abs(static_cast<double>(first_wins) / n - p) < 3.0 * sigma);
}

TEST_CASE("two-coin reduction: expected tosses is 2/(mu_i+mu_j)") {
  rng_stream rng(23);
  const int n = 100000;
  double total = 0.0;
  for (int k = 0; k < n; ++k)
    total += static_cast<double>(coin_reduction_compare(0.3, 0.1, rng).tosses);
  CHECK(total / n == doctest::Approx(5.0).epsilon(0.02));
}

TEST_CASE("sure coins need exactly one toss and win uniformly") {
  rng_stream rng(29);
  const int n = 100000;
  int first_wins = 0;
  for (int k = 0; k < n; ++k) {
    auto result = coin_reduction_compare(1.0, 1.0, rng);
    REQUIRE(result.tosses == 1);
    first_wins += result.winner == 0;
  }
  double sigma = std::sqrt(0.25 / n);
  CHECK(std::abs(static_cast<double>(first_wins) / n - 0.5) < 3.0 * sigma);
}

TEST_CASE("listwise reduction: winner frequency matches mu_i/sum(mu)") {
  rng_stream rng(31);
  std::vector<double> mus = {0.2, 0.2, 0.6};
  const int n = 100000;
  int third_wins = 0;
  for (int k = 0; k < n; ++k)
    third_wins += coin_reduction_compare_listwise(mus, rng).winner == 2;
  const double p = 0.6;
  double sigma = std::sqrt(p * (1 - p) / n);
  CHECK(std::abs(static_cast<double>(third_wins) / n - p) < 3.0 * sigma);
}

TEST_CASE("equal coins win uniformly") {
  rng_stream rng(37);
  std::vector<double> mus = {0.3, 0.3, 0.3, 0.3};
  const int n = 100000;
  std::vector<int> counts(4, 0);
  for (int k = 0; k < n; ++k)
    counts[coin_reduction_compare_listwise(mus, rng).winner] += 1;
  for (int c : counts) {
    double sigma = std::sqrt(0.25 * 0.75 / n);
    CHECK(std::abs(static_cast<double>(c) / n - 0.25) < 3.0 * sigma);
  }
}

TEST_CASE("listwise reduction: expected tosses is m/sum(mu)") {
  rng_stream rng(41);
  std::vector<double> mus = {0.1, 0.1, 0.2};
  const int n = 100000;
  double total = 0.0;
  for (int k = 0; k < n; ++k)
    total += static_cast<double>(coin_reduction_compare_listwise(mus, rng).tosses);
  CHECK(total / n == doctest::Approx(7.5).epsilon(0.02));  // 3 / 0.4
}

TEST_CASE("head probabilities outside (0,1] are rejected") {
  rng_stream rng(43);
  CHECK_THROWS_AS(coin_reduction_compare(0.0, 0.5, rng), invalid_param_error);
  CHECK_THROWS_AS(coin_reduction_compare(0.5, 1.5, rng), invalid_param_error);
  std::vector<double> one = {0.5};
  CHECK_THROWS_AS(coin_reduction_compare_listwise(one, rng), invalid_param_error);
}
