#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphbatch/datagen.hpp"
#include "graphbatch/errors.hpp"
#include "graphbatch/experiment.hpp"

namespace gb = graphbatch;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudgetViolation = 2;

void print_dimension(const std::string& name, const gb::DimensionSummary& d) {
  std::cout << name << ": min " << d.min << ", max " << d.max << ", mean "
            << d.mean << ", median " << d.median << ", std " << d.stddev
            << ", excess kurtosis ";
  if (d.excess_kurtosis)
    std::cout << *d.excess_kurtosis;
  else
    std::cout << "undefined";
  std::cout << ", max/mean " << d.max_over_mean << '\n';
}

int cmd_generate(const gb::GeneratorParams& params, const std::string& output) {
  const std::vector<gb::Graph> dataset = gb::gen_dataset(params);
  gb::write_dataset(dataset, output);
  const gb::DatasetSummary summary = gb::dataset_summary(dataset);
  std::cout << "wrote " << summary.size << " graphs to " << output << '\n';
  print_dimension("nodes", summary.nodes);
  print_dimension("edges", summary.edges);
  return kExitOk;
}

int cmd_bench(const gb::ExperimentConfig& cfg) {
  auto dataset = std::make_shared<const std::vector<gb::Graph>>(
      gb::read_dataset(cfg.dataset_path));
  const gb::ExperimentReport report = gb::run_experiment(cfg, dataset);
  gb::write_report(report, cfg.output_dir);

  std::cout << "algorithm " << gb::algorithm_name(cfg.algorithm)
            << ", batch size " << cfg.batch_size << ", " << cfg.iterations
            << " x " << cfg.steps << " steps\n";
  if (report.budget)
    std::cout << "budget: nodes " << report.budget->node_target << ", edges "
              << report.budget->edge_target << ", graphs "
              << report.budget->graph_target << '\n';
  for (const gb::IterationResult& it : report.iterations) {
    std::cout << "iteration " << it.iteration << ": mean combined "
              << it.aggregates.combined.mean << " ns, median "
              << it.aggregates.combined.median << " ns, recompilations "
              << it.recompilation_count << '\n';
  }
  std::cout << "report written to " << cfg.output_dir << '\n';
  return kExitOk;
}

std::string significance_name(gb::Significance s) {
  switch (s) {
    case gb::Significance::kNone: return "none";
    case gb::Significance::kModerate: return "moderate";
    case gb::Significance::kStrong: return "strong";
  }
  return "?";
}

int cmd_compare(const std::vector<std::string>& report_paths,
                const std::string& metric, const std::string& field,
                const std::string& output_dir) {
  std::vector<gb::ExperimentReport> reports;
  for (const std::string& path : report_paths)
    reports.push_back(gb::read_report(path));

  for (const gb::ExperimentReport& r : reports) {
    if (r.config.batch_size != reports.front().config.batch_size ||
        r.config.dataset_path != reports.front().config.dataset_path)
      throw gb::MismatchedConfigs(
          "reports must share batch_size and dataset to be comparable");
  }

  // One value per iteration: the chosen metric of the chosen field.
  auto iteration_values = [&](const gb::ExperimentReport& r) {
    std::vector<double> values;
    for (const gb::IterationResult& it : r.iterations) {
      const gb::SampleAggregate& a = field == "batch"    ? it.aggregates.batch
                                     : field == "update" ? it.aggregates.update
                                                         : it.aggregates.combined;
      values.push_back(metric == "median" ? a.median : a.mean);
    }
    return values;
  };

  const std::size_t n = reports.size();
  std::vector<std::string> names;
  std::vector<double> per_algo;
  std::vector<std::vector<double>> samples;
  for (const gb::ExperimentReport& r : reports) {
    names.push_back(gb::algorithm_name(r.config.algorithm));
    samples.push_back(iteration_values(r));
    per_algo.push_back(gb::aggregate(samples.back()).mean);
  }
  const double slowest = *std::max_element(per_algo.begin(), per_algo.end());

  std::ostringstream summary;
  summary << "algorithm," << metric << "_" << field << "_ns,speedup_vs_slowest\n";
  for (std::size_t i = 0; i < n; ++i)
    summary << names[i] << ',' << per_algo[i] << ','
            << gb::speedup(slowest, per_algo[i]) << '\n';

  std::ostringstream t_csv, p_csv;
  t_csv << "algorithm";
  p_csv << "algorithm";
  for (const std::string& name : names) {
    t_csv << ',' << name;
    p_csv << ',' << name;
  }
  t_csv << '\n';
  p_csv << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    t_csv << names[i];
    p_csv << names[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        t_csv << ",0";
        p_csv << ",1";
        continue;
      }
      const gb::TTestResult t = gb::students_t_test(samples[i], samples[j]);
      t_csv << ',' << t.t_statistic;
      p_csv << ',' << t.p_value;
    }
    t_csv << '\n';
    p_csv << '\n';
  }

  std::cout << summary.str() << '\n' << "t statistics:\n" << t_csv.str() << '\n'
            << "p values:\n" << p_csv.str();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const gb::TTestResult t = gb::students_t_test(samples[i], samples[j]);
      std::cout << names[i] << " vs " << names[j] << ": t " << t.t_statistic
                << ", df " << t.degrees_of_freedom << ", p " << t.p_value
                << ", significance " << significance_name(t.significance)
                << '\n';
    }

  if (!output_dir.empty()) {
    std::filesystem::create_directories(output_dir);
    const std::filesystem::path base(output_dir);
    std::ofstream(base / "compare_summary.csv") << summary.str();
    std::ofstream(base / "t_matrix.csv") << t_csv.str();
    std::ofstream(base / "p_matrix.csv") << p_csv.str();
    std::cout << "comparison CSVs written to " << output_dir << '\n';
  }
  return kExitOk;
}

int cmd_hist(const std::string& report_path, const std::string& quantity,
             const std::string& output) {
  const gb::ExperimentReport report = gb::read_report(report_path);
  const gb::Histogram* h = nullptr;
  if (quantity == "pre_pad_nodes") h = &report.pre_pad_nodes;
  else if (quantity == "pre_pad_edges") h = &report.pre_pad_edges;
  else if (quantity == "real_graphs") h = &report.real_graphs;
  if (!h || h->total == 0)
    throw gb::MissingQuantity("report has no histogram for " + quantity);

  std::ostringstream csv;
  csv << "bin_lower,count\n";
  for (const auto& [bin, count] : h->counts)
    csv << h->bin_lower(bin) << ',' << count << '\n';

  if (output.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(output);
    if (!out) throw gb::IoError("cannot write " + output);
    out << csv.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph mini-batching benchmark harness"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a synthetic dataset");
  std::string family = "qm9like";
  gb::GeneratorParams params;
  std::string gen_output;
  gen->add_option("--family", family, "qm9like or aflowlike")
      ->check(CLI::IsMember({"qm9like", "aflowlike"}));
  auto* mean_opt = gen->add_option("--mean-nodes", params.mean_nodes);
  auto* std_opt = gen->add_option("--std-nodes", params.std_nodes);
  auto* min_opt = gen->add_option("--min-nodes", params.min_nodes);
  auto* max_opt = gen->add_option("--max-nodes", params.max_nodes);
  auto* knn_opt = gen->add_option("--knn-k", params.knn_k);
  gen->add_option("--size", params.size, "number of graphs")->required();
  gen->add_option("--seed", params.seed);
  gen->add_option("-o,--output", gen_output, "output JSONL path")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Run a batching experiment");
  gb::ExperimentConfig cfg;
  std::string algorithm = "dynamic";
  std::string constant_factor = "minus-one";
  bench->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"static64", "static2n", "static-constant", "dynamic"}))
      ->required();
  bench->add_option("--batch-size", cfg.batch_size)->required();
  bench->add_option("--steps", cfg.steps)->required();
  bench->add_option("--iterations", cfg.iterations);
  bench->add_option("--dataset", cfg.dataset_path)->required();
  bench->add_option("--seed", cfg.seed);
  bench->add_option("--budget-sample-size", cfg.budget_sample_size);
  bench->add_option("--cost-base", cfg.cost_model.base_cost, "ns per step");
  bench->add_option("--cost-node", cfg.cost_model.node_cost, "ns per padded node");
  bench->add_option("--cost-edge", cfg.cost_model.edge_cost, "ns per padded edge");
  bench->add_option("--cost-compile", cfg.cost_model.compile_penalty,
                    "ns per new shape");
  bench->add_option("--constant-factor", constant_factor)
      ->check(CLI::IsMember({"full", "minus-one"}));
  bench->add_option("--output-dir", cfg.output_dir,
                    "falls back to $GRAPHBATCH_OUTPUT_DIR");

  // compare
  auto* compare = app.add_subcommand("compare", "Compare experiment reports");
  std::vector<std::string> report_paths;
  std::string metric = "mean";
  std::string field = "combined";
  std::string compare_output;
  compare->add_option("reports", report_paths, "report.json paths")
      ->required()
      ->expected(2, -1);
  compare->add_option("--metric", metric)->check(CLI::IsMember({"mean", "median"}));
  compare->add_option("--field", field)
      ->check(CLI::IsMember({"batch", "update", "combined"}));
  compare->add_option("-o,--output-dir", compare_output);

  // hist
  auto* hist = app.add_subcommand("hist", "Export a report histogram as CSV");
  std::string hist_report;
  std::string quantity;
  std::string hist_output;
  hist->add_option("report", hist_report, "report.json path")->required();
  hist->add_option("--quantity", quantity)
      ->check(CLI::IsMember({"pre_pad_nodes", "pre_pad_edges", "real_graphs"}))
      ->required();
  hist->add_option("-o,--output", hist_output, "CSV path (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      gb::GeneratorParams defaults =
          family == "aflowlike" ? gb::aflowlike_defaults() : gb::qm9like_defaults();
      defaults.size = params.size;
      defaults.seed = params.seed;
      if (mean_opt->count()) defaults.mean_nodes = params.mean_nodes;
      if (std_opt->count()) defaults.std_nodes = params.std_nodes;
      if (min_opt->count()) defaults.min_nodes = params.min_nodes;
      if (max_opt->count()) defaults.max_nodes = params.max_nodes;
      if (knn_opt->count()) defaults.knn_k = params.knn_k;
      return cmd_generate(defaults, gen_output);
    }
    if (bench->parsed()) {
      cfg.algorithm = gb::parse_algorithm(algorithm);
      cfg.constant_factor = constant_factor == "full"
                                ? gb::ConstantFactor::kFull
                                : gb::ConstantFactor::kMinusOne;
      if (cfg.output_dir.empty()) {
        const char* env = std::getenv("GRAPHBATCH_OUTPUT_DIR");
        if (env) cfg.output_dir = env;
      }
      if (cfg.output_dir.empty())
        throw gb::InvalidParams(
            "--output-dir or GRAPHBATCH_OUTPUT_DIR is required");
      return cmd_bench(cfg);
    }
    if (compare->parsed())
      return cmd_compare(report_paths, metric, field, compare_output);
    if (hist->parsed()) return cmd_hist(hist_report, quantity, hist_output);
  } catch (const gb::GraphExceedsBudget& e) {
    std::cerr << "fatal: " << e.what() << '\n';
    return kExitBudgetViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
