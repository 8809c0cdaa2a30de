#include "graphbatch/padding.hpp"

#include <algorithm>
#include <string>

#include "graphbatch/errors.hpp"

namespace graphbatch {

namespace {

// Feature width carried by the member graphs, or -1 when any member lacks
// features (the merged batch then carries none and the dummy should not
// introduce any).
int node_feature_dim(const std::vector<Graph>& graphs) {
  int dim = 0;
  for (const Graph& g : graphs) {
    if (!g.node_features) return -1;
    if (!g.node_features->empty())
      dim = static_cast<int>(g.node_features->front().size());
  }
  return dim;
}

int edge_feature_dim(const std::vector<Graph>& graphs) {
  int dim = 0;
  for (const Graph& g : graphs) {
    if (!g.edge_features) return -1;
    if (!g.edge_features->empty())
      dim = static_cast<int>(g.edge_features->front().size());
  }
  return dim;
}

SizeTriple sum_sizes(const std::vector<Graph>& graphs) {
  SizeTriple s;
  for (const Graph& g : graphs) s += graph_size(g);
  return s;
}

}  // namespace

Count next_power_of_two(Count s) {
  if (s < 1) throw DomainError("next_power_of_two requires s >= 1");
  Count p = 1;
  while (p < s) p <<= 1;
  return p;
}

Count next_multiple_of_64(Count s) {
  if (s < 1) return 64;
  return ((s + 63) / 64) * 64;
}

Graph make_dummy_graph(Count pad_nodes, Count pad_edges, int node_feature_dim,
                       int edge_feature_dim) {
  if (pad_nodes == 0 && pad_edges > 0)
    throw InvalidDummy("dummy edges require at least one dummy node");
  Graph g;
  g.num_nodes = pad_nodes;
  // Self-loops on the dummy's first node keep indices valid and confine the
  // padding to its own segment.
  g.senders.assign(static_cast<std::size_t>(pad_edges), 0);
  g.receivers.assign(static_cast<std::size_t>(pad_edges), 0);
  if (node_feature_dim >= 0)
    g.node_features = FeatureMatrix(
        static_cast<std::size_t>(pad_nodes),
        std::vector<double>(static_cast<std::size_t>(node_feature_dim), 0.0));
  if (edge_feature_dim >= 0)
    g.edge_features = FeatureMatrix(
        static_cast<std::size_t>(pad_edges),
        std::vector<double>(static_cast<std::size_t>(edge_feature_dim), 0.0));
  return g;
}

std::vector<Graph> pad_to_target(std::vector<Graph> graphs,
                                 const PaddingBudget& budget) {
  const SizeTriple sums = sum_sizes(graphs);
  if (sums.nodes > budget.node_target || sums.edges > budget.edge_target)
    throw BudgetExceeded("batch sums (" + std::to_string(sums.nodes) + ", " +
                         std::to_string(sums.edges) + ") exceed targets (" +
                         std::to_string(budget.node_target) + ", " +
                         std::to_string(budget.edge_target) + ")");
  if (sums.graphs > budget.graph_target - 1)
    throw BudgetExceeded("batch holds " + std::to_string(sums.graphs) +
                         " graphs, graph target " +
                         std::to_string(budget.graph_target) +
                         " leaves no dummy slot");

  const int nf = node_feature_dim(graphs);
  const int ef = edge_feature_dim(graphs);
  graphs.push_back(make_dummy_graph(budget.node_target - sums.nodes,
                                    budget.edge_target - sums.edges, nf, ef));
  while (static_cast<Count>(graphs.size()) < budget.graph_target)
    graphs.push_back(make_dummy_graph(0, 0, nf, ef));
  return graphs;
}

namespace {

std::vector<Graph> pad_rounded(std::vector<Graph> graphs, Count (*round_up)(Count)) {
  if (graphs.empty()) throw EmptyBatch("cannot pad an empty list of graphs");
  const SizeTriple sums = sum_sizes(graphs);
  if (sums.nodes < 1) throw DomainError("padding requires at least one node in total");
  Count t_n = round_up(sums.nodes);
  const Count t_e = sums.edges == 0 ? 0 : round_up(sums.edges);
  // Padding edges are self-loops on the dummy's own node 0, so whenever edges
  // need padding the dummy must receive at least one node: if the node total
  // already sits on a bucket boundary, round up to the next bucket.
  if (t_e > sums.edges && t_n == sums.nodes) t_n = round_up(sums.nodes + 1);
  graphs.push_back(make_dummy_graph(t_n - sums.nodes, t_e - sums.edges,
                                    node_feature_dim(graphs),
                                    edge_feature_dim(graphs)));
  return graphs;
}

}  // namespace

std::vector<Graph> pad_nearest_power_of_two(std::vector<Graph> graphs) {
  return pad_rounded(std::move(graphs), &next_power_of_two);
}

std::vector<Graph> pad_nearest_multiple_of_64(std::vector<Graph> graphs) {
  return pad_rounded(std::move(graphs), &next_multiple_of_64);
}

}  // namespace graphbatch
