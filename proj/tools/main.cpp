// exactrank: generate ranking instances, rank them from noisy comparisons,
// sweep Monte-Carlo benchmarks, and print gap/bound diagnostics.
//
// Exit codes: 0 success, 1 I/O or data failure, 2 usage error,
// 3 algorithm failure (insertion schedule exhausted).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exactrank/bounds.hpp"
#include "exactrank/errors.hpp"
#include "exactrank/gap_profile.hpp"
#include "exactrank/harness.hpp"
#include "exactrank/instance.hpp"
#include "exactrank/listwise.hpp"
#include "exactrank/ranking.hpp"

namespace {

using namespace exactrank;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAlgorithm = 3;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Outputs are composed fully in memory and written in one step, so a failing
// run never leaves a partial file behind.
int emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return kExitIo;
  }
  out << content;
  out.flush();
  if (!out) {
    std::cerr << "error: cannot write output file: " << path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

struct cli_config {
  std::string family_name;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> sweep;
  double delta_gap = 0.1;
  bool delta_given = false;
  double confidence = 0.01;
  std::string algorithm_name = "iir";
  std::uint32_t lwms_width = 3;
  std::uint32_t trials = 100;
  std::uint64_t seed = 0;
  std::uint32_t schedule_cap = kDefaultScheduleCap;
  unsigned threads = 0;  // 0 = hardware
  std::string instance_path;
  std::string output_path;
};

int require_family_delta(instance_family family, const cli_config& config) {
  if (family != instance_family::mnl && !config.delta_given) {
    std::cerr << "error: --delta is required for the homo and random families\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_generate(const cli_config& config) {
  auto family = family_from_string(config.family_name);
  if (!family) {
    std::cerr << "error: unknown family: " << config.family_name << "\n";
    return kExitUsage;
  }
  if (int rc = require_family_delta(*family, config); rc != kExitOk) return rc;

  auto rng = derive_stream(config.seed, rng_phase::instance,
                           {static_cast<std::uint64_t>(*family), config.n});
  std::ostringstream provenance;
  provenance << to_string(*family) << "(n=" << config.n << ",delta="
             << fmt6(config.delta_gap) << ",seed=" << config.seed << ")";
  auto inst =
      generate_instance(*family, config.n, config.delta_gap, rng, provenance.str());
  return emit(config.output_path, instance_to_json(inst));
}

int cmd_rank(const cli_config& config) {
  auto inst = load_instance(config.instance_path);
  auto rng = derive_stream(config.seed, rng_phase::rank, {});

  std::uint64_t comparisons = 0;
  std::vector<item_id> ranking;
  if (config.algorithm_name == "iir") {
    oracle_stats stats;
    instance_oracle oracle(inst, stats);
    auto outcome = iir(oracle, inst.n(), config.confidence, rng, config.schedule_cap);
    ranking = std::move(outcome.ranking);
    comparisons = outcome.comparisons_used;
  } else if (config.algorithm_name == "lwms") {
    oracle_stats stats;
    instance_oracle oracle(inst, stats);
    std::vector<item_id> items(inst.n());
    std::iota(items.begin(), items.end(), item_id{1});
    merge_counter counter;
    ranking = listwise_merge_sort(oracle, items, config.lwms_width, counter, rng);
    comparisons = counter.listwise_comparisons;
  } else {
    std::cerr << "error: unknown algorithm: " << config.algorithm_name << "\n";
    return kExitUsage;
  }

  std::ostringstream out;
  out << "{\"ranking\":[";
  for (std::size_t k = 0; k < ranking.size(); ++k) {
    if (k) out << ',';
    out << ranking[k];
  }
  out << "],\"comparisons\":" << comparisons;
  if (inst.has_true_ranking()) {
    bool correct = std::equal(ranking.begin(), ranking.end(),
                              inst.true_ranking().begin(), inst.true_ranking().end());
    out << ",\"correct\":" << (correct ? "true" : "false");
  }
  out << "}\n";
  return emit(config.output_path, out.str());
}

int cmd_benchmark(const cli_config& config) {
  auto family = family_from_string(config.family_name);
  if (!family) {
    std::cerr << "error: unknown family: " << config.family_name << "\n";
    return kExitUsage;
  }
  if (int rc = require_family_delta(*family, config); rc != kExitOk) return rc;
  if (config.sweep.empty()) {
    std::cerr << "error: --sweep needs at least one n value\n";
    return kExitUsage;
  }
  algorithm_kind algorithm;
  if (config.algorithm_name == "iir") {
    algorithm = algorithm_kind::iir;
  } else if (config.algorithm_name == "lwms") {
    algorithm = algorithm_kind::lwms;
  } else {
    std::cerr << "error: unknown algorithm: " << config.algorithm_name << "\n";
    return kExitUsage;
  }

  std::ostringstream out;
  write_benchmark_csv_header(out);
  for (std::uint32_t n : config.sweep) {
    trial_spec spec;
    spec.family = *family;
    spec.n = n;
    spec.delta_gap = config.delta_gap;
    spec.confidence = config.confidence;
    spec.algorithm = algorithm;
    spec.lwms_width = config.lwms_width;
    spec.trials = config.trials;
    spec.master_seed = config.seed;
    spec.schedule_cap = config.schedule_cap;
    std::cerr << "benchmark: family=" << to_string(*family) << " n=" << n
              << " trials=" << config.trials << "\n";
    write_benchmark_csv_row(out, run_benchmark(spec, config.threads));
  }
  return emit(config.output_path, out.str());
}

int cmd_diagnose(const cli_config& config) {
  auto inst = load_instance(config.instance_path);
  auto profile = compute_gap_profile(inst);
  double eq1 = lower_bound_eq1(profile, inst.n(), config.confidence);
  double eq2 = lower_bound_eq2(profile, inst.n(), config.confidence);

  auto write_vector = [](std::ostringstream& out, const std::vector<double>& values) {
    out << '[';
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (k) out << ',';
      out << fmt17(values[k]);
    }
    out << ']';
  };

  std::ostringstream out;
  out << "{\"n\":" << inst.n();
  out << ",\"kind\":\"" << (inst.kind() == instance_kind::matrix ? "matrix" : "mnl")
      << "\"";
  out << ",\"delta_i\":";
  write_vector(out, profile.delta_i);
  out << ",\"delta_tilde_i\":";
  write_vector(out, profile.delta_tilde_i);
  out << ",\"sst\":" << (profile.sst_holds ? "true" : "false");
  out << ",\"sti\":" << (profile.sti_holds ? "true" : "false");
  out << ",\"confidence\":" << fmt17(config.confidence);
  out << ",\"bound_eq1\":" << fmt17(eq1);
  out << ",\"bound_eq2\":" << fmt17(eq2);
  out << "}\n";
  return emit(config.output_path, out.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact active ranking from noisy comparisons"};
  app.require_subcommand(1);
  cli_config config;

  auto* generate = app.add_subcommand("generate", "generate an instance JSON file");
  generate->add_option("--family", config.family_name, "homo | mnl | random")->required();
  generate->add_option("--n", config.n, "number of items")->required();
  auto* gen_delta = generate->add_option("--delta", config.delta_gap,
                                         "gap parameter (homo/random)");
  generate->add_option("--seed", config.seed, "master seed")->required();
  generate->add_option("-o,--output", config.output_path, "output path (default stdout)");

  auto* rank = app.add_subcommand("rank", "rank an instance file");
  rank->add_option("instance", config.instance_path, "instance JSON path")->required();
  rank->add_option("--seed", config.seed, "master seed")->required();
  rank->add_option("--confidence", config.confidence, "error budget delta")->capture_default_str();
  rank->add_option("--algorithm", config.algorithm_name, "iir | lwms")->capture_default_str();
  rank->add_option("--m", config.lwms_width, "listwise width for lwms")->capture_default_str();
  rank->add_option("--schedule-cap", config.schedule_cap,
                   "max insertion attempts per item")->capture_default_str();
  rank->add_option("-o,--output", config.output_path, "output path (default stdout)");

  auto* benchmark = app.add_subcommand("benchmark", "run a Monte-Carlo sweep, emit CSV");
  benchmark->add_option("--family", config.family_name, "homo | mnl | random")->required();
  benchmark->add_option("--sweep", config.sweep, "comma-separated n values")
      ->required()
      ->delimiter(',');
  auto* bench_delta = benchmark->add_option("--delta", config.delta_gap,
                                            "gap parameter (homo/random)");
  benchmark->add_option("--confidence", config.confidence, "error budget delta")->capture_default_str();
  benchmark->add_option("--trials", config.trials, "trials per sweep point")->capture_default_str();
  benchmark->add_option("--seed", config.seed, "master seed")->required();
  benchmark->add_option("--algorithm", config.algorithm_name, "iir | lwms")->capture_default_str();
  benchmark->add_option("--m", config.lwms_width, "listwise width for lwms")->capture_default_str();
  benchmark->add_option("--threads", config.threads, "worker threads (0 = hardware)")->capture_default_str();
  benchmark->add_option("--schedule-cap", config.schedule_cap,
                        "max insertion attempts per item")->capture_default_str();
  benchmark->add_option("-o,--output", config.output_path, "output path (default stdout)");

  auto* diagnose = app.add_subcommand("diagnose", "gap profile and bound diagnostics");
  diagnose->add_option("instance", config.instance_path, "instance JSON path")->required();
  diagnose->add_option("--confidence", config.confidence, "delta for the bounds")->capture_default_str();
  diagnose->add_option("-o,--output", config.output_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  config.delta_given = gen_delta->count() > 0 || bench_delta->count() > 0;

  try {
    if (generate->parsed()) return cmd_generate(config);
    if (rank->parsed()) return cmd_rank(config);
    if (benchmark->parsed()) return cmd_benchmark(config);
    if (diagnose->parsed()) return cmd_diagnose(config);
  } catch (const schedule_exhausted_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAlgorithm;
  } catch (const invalid_param_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const listwise_unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
