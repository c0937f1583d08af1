#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "exactrank/instance.hpp"
#include "exactrank/ranking.hpp"

namespace exactrank {

enum class algorithm_kind { iir, lwms };

/// One benchmark point: a (family, n) pair, its generated instance, and the
/// trial protocol. All trials at a point share one instance generated from
/// (master_seed, family, n); trials differ only in oracle randomness, each
/// drawing from derive_stream(master_seed, trial, {family, n, trial_index}).
struct trial_spec {
  instance_family family = instance_family::homo;
  std::uint32_t n = 10;
  double delta_gap = 0.1;    // family gap parameter (ignored by mnl)
  double confidence = 0.01;  // delta handed to the algorithm
  algorithm_kind algorithm = algorithm_kind::iir;
  std::uint32_t lwms_width = 3;  // m for lwms
  std::uint32_t trials = 100;
  std::uint64_t master_seed = 0;
  std::uint32_t schedule_cap = kDefaultScheduleCap;
};

struct trial_record {
  bool success = false;
  bool errored = false;  // the trial raised instead of finishing
  std::uint64_t comparisons = 0;
  double wall_ms = 0.0;  // informational; never asserted, machine-dependent
};

struct benchmark_report {
  trial_spec spec;
  std::vector<trial_record> records;
  double error_rate = 0.0;  // wrong results and errored trials both count
  double mean_comparisons = 0.0;
  double median_comparisons = 0.0;
  double p95_comparisons = 0.0;  // nearest-rank: sorted[ceil(0.95 T)] (1-based)
  double bound_eq2 = 0.0;        // eq. 2 diagnostic at this instance/confidence
  double ratio = 0.0;            // mean_comparisons / bound_eq2
};

/// Runs all trials of one point. `threads` = 0 picks the hardware count.
/// The report is a pure function of the spec: records are indexed by trial
/// and aggregated after the parallel section, so worker count and execution
/// order cannot change any reported byte.
benchmark_report run_benchmark(const trial_spec& spec, unsigned threads = 1);

/// True iff the outcome reproduced the instance's true ranking exactly.
bool verify_ranking(const ranking_outcome& outcome, const instance& inst);

/// Label used in CSV output: "iir" or "lwms(m)".
std::string algorithm_label(const trial_spec& spec);

/// CSV with one row per benchmark point; floats carry 6 significant digits.
void write_benchmark_csv_header(std::ostream& out);
void write_benchmark_csv_row(std::ostream& out, const benchmark_report& report);

}  // namespace exactrank
