#pragma once

#include <vector>

#include "graphbatch/graph.hpp"

namespace graphbatch {

// A single disconnected super-graph assembled from a list of graphs.
// Member order is preserved: real graphs in stream order, dummy graphs last.
struct GraphBatch {
  std::vector<Graph> graphs;
  Graph merged;
  std::vector<Count> segment_node_counts;
  std::vector<Count> segment_edge_counts;
  Count num_real_graphs = 0;
  SizeTriple pre_pad_size;  // sums over the real graphs only
};

// Merges a list of graphs into one super-graph, offsetting sender/receiver
// indices by the running node count. The first num_real graphs are counted
// as real; trailing members are treated as padding. num_real < 0 means all
// members are real. Throws EmptyBatch on empty input.
GraphBatch batch_graphs(const std::vector<Graph>& graphs, Count num_real = -1);

// Serial reference for the merge step, kept for testing and benchmarking
// against the OpenMP path.
GraphBatch batch_graphs_serial(const std::vector<Graph>& graphs,
                               Count num_real = -1);

// Rebuilds the member graphs from the merged super-graph using the segment
// counts (does not just return the stored list). Throws CorruptBatch if the
// segment counts disagree with the merged totals.
std::vector<Graph> unbatch(const GraphBatch& batch);

}  // namespace graphbatch
