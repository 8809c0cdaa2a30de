#include "graphbatch/batcher.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "graphbatch/errors.hpp"

namespace graphbatch {

namespace {

Count ceil_div(Count num, Count den) { return (num + den - 1) / den; }

ShapeKey shape_of(const GraphBatch& batch) {
  return {batch.merged.num_nodes, batch.merged.num_edges(),
          static_cast<Count>(batch.graphs.size())};
}

}  // namespace

PaddingBudget estimate_padding_budget(GraphStream& stream, Count batch_size,
                                      Count sample_size) {
  if (batch_size < 2) throw InvalidParams("batch_size must be >= 2");
  if (sample_size < 1) throw InvalidParams("sample_size must be >= 1");

  Count sum_nodes = 0;
  Count sum_edges = 0;
  for (Count i = 0; i < sample_size; ++i) {
    const Graph& g = stream.next();
    sum_nodes += g.num_nodes;
    sum_edges += g.num_edges();
  }
  return {next_multiple_of_64(ceil_div(sum_nodes * batch_size, sample_size)),
          next_multiple_of_64(ceil_div(sum_edges * batch_size, sample_size)),
          batch_size};
}

PaddingBudget scan_max_budget(const std::vector<Graph>& dataset,
                              Count batch_size, ConstantFactor factor) {
  if (dataset.empty()) throw EmptyDataset("scan_max_budget on empty dataset");
  if (batch_size < 2) throw InvalidParams("batch_size must be >= 2");

  Count max_nodes = 0;
  Count max_edges = 0;
  for (const Graph& g : dataset) {
    max_nodes = std::max(max_nodes, g.num_nodes);
    max_edges = std::max(max_edges, g.num_edges());
  }
  const Count mult =
      factor == ConstantFactor::kMinusOne ? batch_size - 1 : batch_size;
  return {next_multiple_of_64(max_nodes * mult),
          next_multiple_of_64(max_edges * mult), batch_size};
}

StaticBatcher::StaticBatcher(GraphStream stream, Count batch_size,
                             StaticMode mode,
                             std::optional<PaddingBudget> constant_budget)
    : stream_(std::move(stream)),
      batch_size_(batch_size),
      mode_(mode),
      constant_budget_(std::move(constant_budget)) {
  if (batch_size_ < 2) throw InvalidParams("batch_size must be >= 2");
  if (mode_ == StaticMode::kConstant && !constant_budget_)
    throw InvalidParams("constant mode requires a budget");
}

PaddedBatch StaticBatcher::next() {
  std::vector<Graph> members;
  members.reserve(static_cast<std::size_t>(batch_size_ - 1));
  for (Count i = 0; i < batch_size_ - 1; ++i) members.push_back(stream_.next());
  const Count num_real = static_cast<Count>(members.size());

  std::vector<Graph> padded;
  Algorithm algo;
  switch (mode_) {
    case StaticMode::kPow2:
      padded = pad_nearest_power_of_two(std::move(members));
      algo = Algorithm::kStatic2N;
      break;
    case StaticMode::kMult64:
      padded = pad_nearest_multiple_of_64(std::move(members));
      algo = Algorithm::kStatic64;
      break;
    case StaticMode::kConstant:
      padded = pad_to_target(std::move(members), *constant_budget_);
      algo = Algorithm::kStaticConstant;
      break;
  }

  PaddedBatch out;
  out.batch = batch_graphs(padded, num_real);
  out.shape = shape_of(out.batch);
  out.algorithm = algo;
  out.step_index = step_++;
  return out;
}

DynamicBatcher::DynamicBatcher(GraphStream stream, PaddingBudget budget)
    : stream_(std::move(stream)), budget_(budget) {
  if (budget_.node_target < 1 || budget_.edge_target < 0 ||
      budget_.graph_target < 2)
    throw InvalidParams("invalid padding budget");
}

PaddedBatch DynamicBatcher::next() {
  std::vector<Graph> members;
  SizeTriple acc;
  // One member slot is reserved for the dummy graph, and one node is
  // reserved so the dummy can always host self-loop padding edges.
  const SizeTriple limit{budget_.node_target - 1, budget_.edge_target,
                         budget_.graph_target - 1};

  for (;;) {
    Graph g = pending_ ? *std::exchange(pending_, std::nullopt) : stream_.next();
    const SizeTriple si = graph_size(g);
    if (si.nodes > limit.nodes || si.edges > budget_.edge_target)
      throw GraphExceedsBudget(
          "graph of size (" + std::to_string(si.nodes) + " nodes, " +
          std::to_string(si.edges) + " edges) exceeds budget (" +
          std::to_string(budget_.node_target) + ", " +
          std::to_string(budget_.edge_target) +
          "); restart with a larger padding target");

    const SizeTriple with = acc + si;
    if (with.nodes > limit.nodes || with.edges > limit.edges ||
        with.graphs > limit.graphs) {
      // The overflowing graph seeds the next batch; nothing is dropped.
      pending_ = std::move(g);
      break;
    }
    members.push_back(std::move(g));
    acc = with;
  }

  const Count num_real = static_cast<Count>(members.size());
  std::vector<Graph> padded = pad_to_target(std::move(members), budget_);

  PaddedBatch out;
  out.batch = batch_graphs(padded, num_real);
  out.shape = shape_of(out.batch);
  out.algorithm = Algorithm::kDynamic;
  out.step_index = step_++;
  return out;
}

}  // namespace graphbatch
