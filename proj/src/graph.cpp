#include "graphbatch/graph.hpp"

#include <string>

#include "graphbatch/errors.hpp"

namespace graphbatch {

Graph make_graph(Count num_nodes, std::vector<Index> senders,
                 std::vector<Index> receivers,
                 std::optional<FeatureMatrix> node_features,
                 std::optional<FeatureMatrix> edge_features) {
  if (num_nodes < 0) throw DomainError("num_nodes must be >= 0");
  if (senders.size() != receivers.size()) {
    throw LengthMismatch("senders (" + std::to_string(senders.size()) +
                         ") and receivers (" + std::to_string(receivers.size()) +
                         ") differ in length");
  }
  for (Index s : senders) {
    if (s < 0 || s >= num_nodes)
      throw IndexOutOfRange("sender index " + std::to_string(s) +
                            " not in [0, " + std::to_string(num_nodes) + ")");
  }
  for (Index r : receivers) {
    if (r < 0 || r >= num_nodes)
      throw IndexOutOfRange("receiver index " + std::to_string(r) +
                            " not in [0, " + std::to_string(num_nodes) + ")");
  }
  if (node_features && node_features->size() != static_cast<std::size_t>(num_nodes))
    throw LengthMismatch("node_features length != num_nodes");
  if (edge_features && edge_features->size() != senders.size())
    throw LengthMismatch("edge_features length != num_edges");

  Graph g;
  g.num_nodes = num_nodes;
  g.senders = std::move(senders);
  g.receivers = std::move(receivers);
  g.node_features = std::move(node_features);
  g.edge_features = std::move(edge_features);
  return g;
}

SizeTriple graph_size(const Graph& g) {
  return {g.num_nodes, g.num_edges(), 1};
}

}  // namespace graphbatch
