#include "exactrank/coins.hpp"

#include "exactrank/errors.hpp"

namespace exactrank {

namespace {
void check_mu(double mu) {
  if (!(mu > 0.0 && mu <= 1.0))
    throw invalid_param_error("coin head probability must lie in (0,1]");
}
}  // namespace

coin_flip_result coin_reduction_compare(double mu_first, double mu_second,
                                        rng_stream& rng) {
  const double mus[2] = {mu_first, mu_second};
  return coin_reduction_compare_listwise(mus, rng);
}

coin_flip_result coin_reduction_compare_listwise(std::span<const double> mus,
                                                 rng_stream& rng) {
  if (mus.size() < 2) throw invalid_param_error("need at least two coins");
  for (double mu : mus) check_mu(mu);

  coin_flip_result result;
  for (;;) {
    std::size_t pick = static_cast<std::size_t>(rng.next_below(mus.size()));
    result.tosses += 1;
    if (rng.bernoulli(mus[pick])) {
      result.winner = pick;
      return result;
    }
  }
}

}  // namespace exactrank
