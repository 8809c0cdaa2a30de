#include "graphbatch/batch.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "graphbatch/errors.hpp"

namespace graphbatch {

namespace {

bool all_have_node_features(const std::vector<Graph>& graphs) {
  return std::all_of(graphs.begin(), graphs.end(),
                     [](const Graph& g) { return g.node_features.has_value(); });
}

bool all_have_edge_features(const std::vector<Graph>& graphs) {
  return std::all_of(graphs.begin(), graphs.end(),
                     [](const Graph& g) { return g.edge_features.has_value(); });
}

GraphBatch init_batch(const std::vector<Graph>& graphs, Count num_real) {
  if (graphs.empty()) throw EmptyBatch("cannot batch an empty list of graphs");
  if (num_real < 0) num_real = static_cast<Count>(graphs.size());
  if (num_real > static_cast<Count>(graphs.size()))
    throw EmptyBatch("num_real exceeds the number of member graphs");

  GraphBatch batch;
  batch.graphs = graphs;
  batch.num_real_graphs = num_real;
  batch.segment_node_counts.reserve(graphs.size());
  batch.segment_edge_counts.reserve(graphs.size());
  for (const Graph& g : graphs) {
    batch.segment_node_counts.push_back(g.num_nodes);
    batch.segment_edge_counts.push_back(g.num_edges());
  }
  for (Count i = 0; i < num_real; ++i) batch.pre_pad_size += graph_size(graphs[i]);
  return batch;
}

}  // namespace

GraphBatch batch_graphs_serial(const std::vector<Graph>& graphs, Count num_real) {
  GraphBatch batch = init_batch(graphs, num_real);

  const bool with_nf = all_have_node_features(graphs);
  const bool with_ef = all_have_edge_features(graphs);

  Graph& merged = batch.merged;
  if (with_nf) merged.node_features.emplace();
  if (with_ef) merged.edge_features.emplace();

  Count node_offset = 0;
  for (const Graph& g : graphs) {
    for (std::size_t i = 0; i < g.senders.size(); ++i) {
      merged.senders.push_back(g.senders[i] + node_offset);
      merged.receivers.push_back(g.receivers[i] + node_offset);
    }
    if (with_nf)
      merged.node_features->insert(merged.node_features->end(),
                                   g.node_features->begin(),
                                   g.node_features->end());
    if (with_ef)
      merged.edge_features->insert(merged.edge_features->end(),
                                   g.edge_features->begin(),
                                   g.edge_features->end());
    node_offset += g.num_nodes;
  }
  merged.num_nodes = node_offset;
  return batch;
}

GraphBatch batch_graphs(const std::vector<Graph>& graphs, Count num_real) {
  GraphBatch batch = init_batch(graphs, num_real);

  const bool with_nf = all_have_node_features(graphs);
  const bool with_ef = all_have_edge_features(graphs);

  const std::size_t n_members = graphs.size();
  std::vector<Count> node_offsets(n_members + 1, 0);
  std::vector<Count> edge_offsets(n_members + 1, 0);
  for (std::size_t i = 0; i < n_members; ++i) {
    node_offsets[i + 1] = node_offsets[i] + graphs[i].num_nodes;
    edge_offsets[i + 1] = edge_offsets[i] + graphs[i].num_edges();
  }
  const Count total_nodes = node_offsets[n_members];
  const Count total_edges = edge_offsets[n_members];

  Graph& merged = batch.merged;
  merged.num_nodes = total_nodes;
  merged.senders.resize(static_cast<std::size_t>(total_edges));
  merged.receivers.resize(static_cast<std::size_t>(total_edges));
  if (with_nf) merged.node_features.emplace(static_cast<std::size_t>(total_nodes));
  if (with_ef) merged.edge_features.emplace(static_cast<std::size_t>(total_edges));

#pragma omp parallel for schedule(static) if (total_edges > 4096)
  for (std::ptrdiff_t m = 0; m < static_cast<std::ptrdiff_t>(n_members); ++m) {
    const Graph& g = graphs[static_cast<std::size_t>(m)];
    const Count no = node_offsets[static_cast<std::size_t>(m)];
    const Count eo = edge_offsets[static_cast<std::size_t>(m)];
    for (std::size_t i = 0; i < g.senders.size(); ++i) {
      merged.senders[static_cast<std::size_t>(eo) + i] = g.senders[i] + no;
      merged.receivers[static_cast<std::size_t>(eo) + i] = g.receivers[i] + no;
    }
    if (with_nf)
      std::copy(g.node_features->begin(), g.node_features->end(),
                merged.node_features->begin() + static_cast<std::ptrdiff_t>(no));
    if (with_ef)
      std::copy(g.edge_features->begin(), g.edge_features->end(),
                merged.edge_features->begin() + static_cast<std::ptrdiff_t>(eo));
  }
  return batch;
}

std::vector<Graph> unbatch(const GraphBatch& batch) {
  const Count total_nodes = std::accumulate(batch.segment_node_counts.begin(),
                                            batch.segment_node_counts.end(), Count{0});
  const Count total_edges = std::accumulate(batch.segment_edge_counts.begin(),
                                            batch.segment_edge_counts.end(), Count{0});
  if (total_nodes != batch.merged.num_nodes)
    throw CorruptBatch("segment node counts sum to " + std::to_string(total_nodes) +
                       " but merged graph has " + std::to_string(batch.merged.num_nodes));
  if (total_edges != batch.merged.num_edges())
    throw CorruptBatch("segment edge counts sum to " + std::to_string(total_edges) +
                       " but merged graph has " + std::to_string(batch.merged.num_edges()));
  if (batch.segment_node_counts.size() != batch.segment_edge_counts.size())
    throw CorruptBatch("segment count lists differ in length");

  const Graph& merged = batch.merged;
  std::vector<Graph> out;
  out.reserve(batch.segment_node_counts.size());

  Count node_offset = 0;
  Count edge_offset = 0;
  for (std::size_t m = 0; m < batch.segment_node_counts.size(); ++m) {
    const Count nn = batch.segment_node_counts[m];
    const Count ne = batch.segment_edge_counts[m];
    Graph g;
    g.num_nodes = nn;
    g.senders.reserve(static_cast<std::size_t>(ne));
    g.receivers.reserve(static_cast<std::size_t>(ne));
    for (Count i = 0; i < ne; ++i) {
      const std::size_t idx = static_cast<std::size_t>(edge_offset + i);
      const Index s = merged.senders[idx] - node_offset;
      const Index r = merged.receivers[idx] - node_offset;
      if (s < 0 || s >= nn || r < 0 || r >= nn)
        throw CorruptBatch("edge index escapes its segment");
      g.senders.push_back(s);
      g.receivers.push_back(r);
    }
    if (merged.node_features)
      g.node_features = FeatureMatrix(
          merged.node_features->begin() + static_cast<std::ptrdiff_t>(node_offset),
          merged.node_features->begin() + static_cast<std::ptrdiff_t>(node_offset + nn));
    if (merged.edge_features)
      g.edge_features = FeatureMatrix(
          merged.edge_features->begin() + static_cast<std::ptrdiff_t>(edge_offset),
          merged.edge_features->begin() + static_cast<std::ptrdiff_t>(edge_offset + ne));
    out.push_back(std::move(g));
    node_offset += nn;
    edge_offset += ne;
  }
  return out;
}

}  // namespace graphbatch
