#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphbatch/graph.hpp"

namespace graphbatch {

enum class GraphFamily {
  kGaussianFullyConnected,  // QM9-like: Gaussian node counts, n(n-1) edges
  kLongtailKnn,             // AFLOW-like: lognormal node counts, min(k*n, n(n-1)) edges
};

struct GeneratorParams {
  GraphFamily family = GraphFamily::kGaussianFullyConnected;
  double mean_nodes = 17.0;  // lognormal family: log-space median
  double std_nodes = 3.0;    // lognormal family: log-space sigma
  Count min_nodes = 3;
  Count max_nodes = 29;
  Count knn_k = 24;
  Count size = 1;
  std::uint64_t seed = 0;
};

GeneratorParams qm9like_defaults();
GeneratorParams aflowlike_defaults();

// Generates `size` graphs with per-index RNG streams, so the result is a
// pure function of params regardless of thread count.
std::vector<Graph> gen_dataset(const GeneratorParams& params);

// Serial reference for gen_dataset, kept for testing and benchmarking.
std::vector<Graph> gen_dataset_serial(const GeneratorParams& params);

// JSON Lines, one object per graph:
//   {"n": <num_nodes>, "s": [senders...], "r": [receivers...]}
// with optional "nf" / "ef" feature matrices. Round-trips losslessly.
void write_dataset(const std::vector<Graph>& dataset, const std::string& path);
std::vector<Graph> read_dataset(const std::string& path);

struct DimensionSummary {
  Count min = 0;
  Count max = 0;
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;
  std::optional<double> excess_kurtosis;  // absent when variance is zero
  double max_over_mean = 0.0;
};

struct DatasetSummary {
  std::size_t size = 0;
  DimensionSummary nodes;
  DimensionSummary edges;
};

DatasetSummary dataset_summary(const std::vector<Graph>& dataset);

}  // namespace graphbatch
