#pragma once

#include <vector>

#include "graphbatch/graph.hpp"

namespace graphbatch {

// (node target, edge target, graph target) triple governing dynamic and
// constant padding. graph_target includes the dummy-graph slot.
struct PaddingBudget {
  Count node_target = 0;
  Count edge_target = 0;
  Count graph_target = 0;

  bool operator==(const PaddingBudget&) const = default;
};

// Smallest power of two >= s. Throws DomainError for s <= 0; an assembled
// batch always has at least one node.
Count next_power_of_two(Count s);

// Smallest multiple of 64 >= max(s, 1); next_multiple_of_64(0) = 64.
Count next_multiple_of_64(Count s);

// A padding graph: pad_nodes nodes and pad_edges self-loop edges on local
// node 0. When node_feature_dim >= 0 the dummy carries zero node feature
// vectors of that width, likewise edge_feature_dim for edges (-1 means no
// features). Throws InvalidDummy if pad_edges > 0 with pad_nodes = 0.
Graph make_dummy_graph(Count pad_nodes, Count pad_edges,
                       int node_feature_dim = -1, int edge_feature_dim = -1);

// Appends one dummy graph absorbing the node/edge deficits, then empty dummy
// graphs until the list holds exactly budget.graph_target members. The
// resulting sums equal the budget in all three components. Throws
// BudgetExceeded if any pre-sum exceeds its target or there are more than
// graph_target - 1 members.
std::vector<Graph> pad_to_target(std::vector<Graph> graphs,
                                 const PaddingBudget& budget);

// Appends one dummy graph so node/edge totals reach the next power of two
// (an edge total of 0 stays 0). When edges need padding but the node total
// already sits on a bucket boundary, the node total is rounded to the next
// bucket so the dummy has a node to carry its self-loop edges.
std::vector<Graph> pad_nearest_power_of_two(std::vector<Graph> graphs);

// Same with multiple-of-64 rounding.
std::vector<Graph> pad_nearest_multiple_of_64(std::vector<Graph> graphs);

}  // namespace graphbatch
