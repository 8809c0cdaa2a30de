#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphbatch/batcher.hpp"
#include "graphbatch/compile_sim.hpp"
#include "graphbatch/stats.hpp"

namespace graphbatch {

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::kDynamic;
  Count batch_size = 32;
  Count steps = 1000;
  Count iterations = 1;
  std::string dataset_path;
  std::uint64_t seed = 0;
  Count budget_sample_size = 1000;
  CostModel cost_model;
  ConstantFactor constant_factor = ConstantFactor::kMinusOne;
  std::string output_dir;
};

struct StepRow {
  Count step = 0;
  std::int64_t batch_time_ns = 0;
  std::int64_t update_time_ns = 0;
  std::int64_t combined_time_ns = 0;
  ShapeKey shape;
  Count real_graphs = 0;
  bool new_shape = false;
};

struct IterationResult {
  Count iteration = 0;
  TimingAggregate aggregates;
  Count recompilation_count = 0;
  std::vector<ShapeRegistry::Event> compile_events;
  std::vector<StepRow> steps;
};

struct ExperimentReport {
  ExperimentConfig config;
  double clock_resolution_ns = 0.0;
  std::optional<PaddingBudget> budget;
  std::vector<IterationResult> iterations;
  // accumulated over all iterations, bin width 1
  Histogram pre_pad_nodes;
  Histogram pre_pad_edges;
  Histogram real_graphs;
};

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

// Runs config.iterations independent iterations, each with a fresh stream
// (seed + iteration index) and a fresh shape registry. Batching is wall-
// clocked; the update step cost is simulated from the padded shape.
ExperimentReport run_experiment(const ExperimentConfig& config,
                                std::shared_ptr<const std::vector<Graph>> dataset);

nlohmann::json report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const nlohmann::json& j);

// Writes report.json and steps_<iter>.csv into dir.
void write_report(const ExperimentReport& report, const std::string& dir);
ExperimentReport read_report(const std::string& report_json_path);

}  // namespace graphbatch
