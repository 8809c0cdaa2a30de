#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace graphbatch {

using Count = std::int64_t;
using Index = std::int64_t;

using FeatureMatrix = std::vector<std::vector<double>>;

// One variable-size directed graph. Undirected edges are stored as two
// directed edges. Immutable by convention after construction via make_graph.
struct Graph {
  Count num_nodes = 0;
  std::vector<Index> senders;
  std::vector<Index> receivers;
  std::optional<FeatureMatrix> node_features;
  std::optional<FeatureMatrix> edge_features;

  Count num_edges() const { return static_cast<Count>(senders.size()); }

  bool operator==(const Graph&) const = default;
};

// (nodes, edges, graphs) size triple; graphs is 1 for a single graph.
struct SizeTriple {
  Count nodes = 0;
  Count edges = 0;
  Count graphs = 0;

  SizeTriple operator+(const SizeTriple& o) const {
    return {nodes + o.nodes, edges + o.edges, graphs + o.graphs};
  }
  SizeTriple& operator+=(const SizeTriple& o) {
    nodes += o.nodes;
    edges += o.edges;
    graphs += o.graphs;
    return *this;
  }
  bool operator==(const SizeTriple&) const = default;
};

// Validates and constructs a Graph. Throws IndexOutOfRange if any
// sender/receiver index is outside [0, num_nodes), LengthMismatch if
// senders/receivers or feature lengths disagree.
Graph make_graph(Count num_nodes, std::vector<Index> senders,
                 std::vector<Index> receivers,
                 std::optional<FeatureMatrix> node_features = std::nullopt,
                 std::optional<FeatureMatrix> edge_features = std::nullopt);

SizeTriple graph_size(const Graph& g);

}  // namespace graphbatch
