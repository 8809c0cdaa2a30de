#include "graphbatch/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "graphbatch/errors.hpp"
#include "graphbatch/rng.hpp"

namespace graphbatch {

namespace {

void validate(const GeneratorParams& p) {
  if (p.min_nodes < 1) throw InvalidParams("min_nodes must be >= 1");
  if (p.max_nodes < p.min_nodes) throw InvalidParams("max_nodes < min_nodes");
  if (p.size < 1) throw InvalidParams("size must be >= 1");
  if (p.knn_k < 1) throw InvalidParams("knn_k must be >= 1");
  if (p.mean_nodes <= 0.0) throw InvalidParams("mean_nodes must be positive");
  if (p.std_nodes < 0.0) throw InvalidParams("std_nodes must be >= 0");
}

Count draw_node_count(const GeneratorParams& p, Rng& rng) {
  const double z = rng.next_gaussian();
  double value;
  if (p.family == GraphFamily::kGaussianFullyConnected)
    value = p.mean_nodes + p.std_nodes * z;
  else
    value = std::exp(std::log(p.mean_nodes) + p.std_nodes * z);
  const Count n = static_cast<Count>(std::llround(value));
  return std::clamp(n, p.min_nodes, p.max_nodes);
}

Graph gen_one(const GeneratorParams& p, std::uint64_t index) {
  Rng rng(mix_seed(p.seed, index));
  const Count n = draw_node_count(p, rng);

  Graph g;
  g.num_nodes = n;
  if (p.family == GraphFamily::kGaussianFullyConnected || p.knn_k >= n - 1) {
    // fully connected: all ordered pairs, n(n-1) directed edges
    g.senders.reserve(static_cast<std::size_t>(n * (n - 1)));
    g.receivers.reserve(static_cast<std::size_t>(n * (n - 1)));
    for (Count i = 0; i < n; ++i)
      for (Count j = 0; j < n; ++j)
        if (i != j) {
          g.senders.push_back(i);
          g.receivers.push_back(j);
        }
  } else {
    // k out-edges per node to the next k nodes cyclically: exactly k*n
    // distinct directed edges. Only the count matters for batching, so
    // any valid connectivity realizing it will do.
    g.senders.reserve(static_cast<std::size_t>(p.knn_k * n));
    g.receivers.reserve(static_cast<std::size_t>(p.knn_k * n));
    for (Count i = 0; i < n; ++i)
      for (Count d = 1; d <= p.knn_k; ++d) {
        g.senders.push_back(i);
        g.receivers.push_back((i + d) % n);
      }
  }
  g.node_features =
      FeatureMatrix(static_cast<std::size_t>(n), std::vector<double>{1.0});
  return g;
}

}  // namespace

GeneratorParams qm9like_defaults() {
  GeneratorParams p;
  p.family = GraphFamily::kGaussianFullyConnected;
  p.mean_nodes = 17.0;
  p.std_nodes = 3.0;
  p.min_nodes = 3;
  p.max_nodes = 29;
  return p;
}

GeneratorParams aflowlike_defaults() {
  GeneratorParams p;
  p.family = GraphFamily::kLongtailKnn;
  p.mean_nodes = 9.0;  // log-space median
  p.std_nodes = 0.7;   // log-space sigma
  p.min_nodes = 2;
  p.max_nodes = 192;
  p.knn_k = 24;
  return p;
}

std::vector<Graph> gen_dataset(const GeneratorParams& params) {
  validate(params);
  std::vector<Graph> out(static_cast<std::size_t>(params.size));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(params.size); ++i)
    out[static_cast<std::size_t>(i)] =
        gen_one(params, static_cast<std::uint64_t>(i));
  return out;
}

std::vector<Graph> gen_dataset_serial(const GeneratorParams& params) {
  validate(params);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(params.size));
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(params.size); ++i)
    out.push_back(gen_one(params, i));
  return out;
}

void write_dataset(const std::vector<Graph>& dataset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  for (const Graph& g : dataset) {
    nlohmann::json j;
    j["n"] = g.num_nodes;
    j["s"] = g.senders;
    j["r"] = g.receivers;
    if (g.node_features) j["nf"] = *g.node_features;
    if (g.edge_features) j["ef"] = *g.edge_features;
    out << j.dump() << '\n';
  }
  if (!out) throw IoError("write to " + path + " failed");
}

std::vector<Graph> read_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path + " for reading");

  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const nlohmann::json j = nlohmann::json::parse(line);
      std::optional<FeatureMatrix> nf, ef;
      if (j.contains("nf")) nf = j.at("nf").get<FeatureMatrix>();
      if (j.contains("ef")) ef = j.at("ef").get<FeatureMatrix>();
      out.push_back(make_graph(j.at("n").get<Count>(),
                               j.at("s").get<std::vector<Index>>(),
                               j.at("r").get<std::vector<Index>>(),
                               std::move(nf), std::move(ef)));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(lineno, e.what());
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (out.empty()) throw EmptyDataset(path + " holds no graphs");
  return out;
}

namespace {

DimensionSummary summarize(std::vector<Count> values) {
  DimensionSummary s;
  const std::size_t n = values.size();
  std::sort(values.begin(), values.end());
  s.min = values.front();
  s.max = values.back();
  s.median = n % 2 == 1 ? static_cast<double>(values[n / 2])
                        : 0.5 * static_cast<double>(values[n / 2 - 1] +
                                                    values[n / 2]);
  double mean = 0.0;
  for (Count v : values) mean += static_cast<double>(v);
  mean /= static_cast<double>(n);
  s.mean = mean;

  double m2 = 0.0, m4 = 0.0;
  for (Count v : values) {
    const double d = static_cast<double>(v) - mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  s.stddev = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0;
  if (m2 > 0.0) {
    m2 /= static_cast<double>(n);
    m4 /= static_cast<double>(n);
    s.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  }
  s.max_over_mean = mean > 0.0 ? static_cast<double>(s.max) / mean : 0.0;
  return s;
}

}  // namespace

DatasetSummary dataset_summary(const std::vector<Graph>& dataset) {
  if (dataset.empty()) throw EmptyDataset("dataset_summary on empty dataset");
  std::vector<Count> nodes, edges;
  nodes.reserve(dataset.size());
  edges.reserve(dataset.size());
  for (const Graph& g : dataset) {
    nodes.push_back(g.num_nodes);
    edges.push_back(g.num_edges());
  }
  DatasetSummary s;
  s.size = dataset.size();
  s.nodes = summarize(std::move(nodes));
  s.edges = summarize(std::move(edges));
  return s;
}

}  // namespace graphbatch
