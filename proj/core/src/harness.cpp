#include "exactrank/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "exactrank/bounds.hpp"
#include "exactrank/errors.hpp"
#include "exactrank/gap_profile.hpp"
#include "exactrank/listwise.hpp"

namespace exactrank {

namespace {

std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

trial_record run_one_trial(const trial_spec& spec, const instance& inst,
                           std::uint32_t trial_index) {
  auto rng = derive_stream(spec.master_seed, rng_phase::trial,
                           {static_cast<std::uint64_t>(spec.family), spec.n, trial_index});
  oracle_stats stats;
  instance_oracle oracle(inst, stats);

  trial_record record;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (spec.algorithm == algorithm_kind::iir) {
      auto outcome = iir(oracle, spec.n, spec.confidence, rng, spec.schedule_cap);
      record.success = verify_ranking(outcome, inst);
      record.comparisons = outcome.comparisons_used;
    } else {
      std::vector<item_id> items(spec.n);
      std::iota(items.begin(), items.end(), item_id{1});
      merge_counter counter;
      auto sorted = listwise_merge_sort(oracle, items, spec.lwms_width, counter, rng);
      record.success = std::equal(sorted.begin(), sorted.end(),
                                  inst.true_ranking().begin(), inst.true_ranking().end());
      record.comparisons = counter.listwise_comparisons;
    }
  } catch (const error&) {
    record.errored = true;
    record.success = false;
    record.comparisons = stats.total_calls();
  }
  record.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return record;
}

}  // namespace

bool verify_ranking(const ranking_outcome& outcome, const instance& inst) {
  if (outcome.failed) return false;
  return std::equal(outcome.ranking.begin(), outcome.ranking.end(),
                    inst.true_ranking().begin(), inst.true_ranking().end()) &&
         outcome.ranking.size() == inst.true_ranking().size();
}

std::string algorithm_label(const trial_spec& spec) {
  if (spec.algorithm == algorithm_kind::iir) return "iir";
  return "lwms(" + std::to_string(spec.lwms_width) + ")";
}

benchmark_report run_benchmark(const trial_spec& spec, unsigned threads) {
  if (spec.trials < 1) throw invalid_param_error("benchmark needs at least one trial");

  benchmark_report report;
  report.spec = spec;

  auto instance_rng = derive_stream(spec.master_seed, rng_phase::instance,
                                    {static_cast<std::uint64_t>(spec.family), spec.n});
  std::ostringstream provenance;
  provenance << to_string(spec.family) << "(n=" << spec.n << ",delta=" << fmt6(spec.delta_gap)
             << ",seed=" << spec.master_seed << ")";
  const instance inst = generate_instance(spec.family, spec.n, spec.delta_gap,
                                          instance_rng, provenance.str());

  report.bound_eq2 = lower_bound_eq2(compute_gap_profile(inst), spec.n, spec.confidence);

  report.records.assign(spec.trials, {});
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, spec.trials);

  if (threads <= 1) {
    for (std::uint32_t k = 0; k < spec.trials; ++k)
      report.records[k] = run_one_trial(spec, inst, k);
  } else {
    std::atomic<std::uint32_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::uint32_t k = next.fetch_add(1, std::memory_order_relaxed);
        if (k >= spec.trials) return;
        report.records[k] = run_one_trial(spec, inst, k);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::uint32_t failures = 0;
  std::vector<std::uint64_t> comparisons;
  comparisons.reserve(spec.trials);
  for (const auto& record : report.records) {
    if (!record.success) ++failures;
    comparisons.push_back(record.comparisons);
  }
  std::sort(comparisons.begin(), comparisons.end());

  const std::size_t count = comparisons.size();
  report.error_rate = static_cast<double>(failures) / static_cast<double>(count);
  double sum = 0.0;
  for (std::uint64_t c : comparisons) sum += static_cast<double>(c);
  report.mean_comparisons = sum / static_cast<double>(count);
  report.median_comparisons =
      count % 2 == 1 ? static_cast<double>(comparisons[count / 2])
                     : 0.5 * (static_cast<double>(comparisons[count / 2 - 1]) +
                              static_cast<double>(comparisons[count / 2]));
  const std::size_t rank95 = static_cast<std::size_t>(
      std::ceil(0.95 * static_cast<double>(count)));  // 1-based nearest rank
  report.p95_comparisons = static_cast<double>(comparisons[rank95 - 1]);
  report.ratio = report.bound_eq2 > 0.0 ? report.mean_comparisons / report.bound_eq2 : 0.0;
  return report;
}

void write_benchmark_csv_header(std::ostream& out) {
  out << "family,n,delta_gap,confidence,algorithm,trials,master_seed,error_rate,"
         "mean_comparisons,median_comparisons,p95_comparisons,bound_eq2,ratio\n";
}

void write_benchmark_csv_row(std::ostream& out, const benchmark_report& report) {
  const trial_spec& spec = report.spec;
  out << to_string(spec.family) << ',' << spec.n << ',' << fmt6(spec.delta_gap) << ','
      << fmt6(spec.confidence) << ',' << algorithm_label(spec) << ',' << spec.trials << ','
      << spec.master_seed << ',' << fmt6(report.error_rate) << ','
      << fmt6(report.mean_comparisons) << ',' << fmt6(report.median_comparisons) << ','
      << fmt6(report.p95_comparisons) << ',' << fmt6(report.bound_eq2) << ','
      << fmt6(report.ratio) << '\n';
}

}  // namespace exactrank
