#pragma once

#include <optional>
#include <vector>

#include "graphbatch/batch.hpp"
#include "graphbatch/compile_sim.hpp"
#include "graphbatch/padding.hpp"
#include "graphbatch/stream.hpp"

namespace graphbatch {

enum class Algorithm { kStatic64, kStatic2N, kStaticConstant, kDynamic };

// Whether the static-constant target multiplies the dataset maximum by the
// full batch size or by batch size minus one (reserving the dummy slot).
enum class ConstantFactor { kFull, kMinusOne };

struct PaddedBatch {
  GraphBatch batch;
  ShapeKey shape;
  Algorithm algorithm = Algorithm::kDynamic;
  Count step_index = 0;
};

// Samples the first sample_size stream items and derives the dynamic
// padding budget: mean size per graph times batch size, rounded up to the
// next multiple of 64 (nodes and edges independently).
PaddingBudget estimate_padding_budget(GraphStream& stream, Count batch_size,
                                      Count sample_size);

// Static-constant target: dataset node/edge maxima times the batch factor,
// rounded up to the next multiple of 64.
PaddingBudget scan_max_budget(const std::vector<Graph>& dataset,
                              Count batch_size,
                              ConstantFactor factor = ConstantFactor::kMinusOne);

enum class StaticMode { kPow2, kMult64, kConstant };

// Collects batch_size - 1 graphs per step and pads totals per mode. The
// iterator is infinite; the caller bounds the number of steps.
class StaticBatcher {
 public:
  StaticBatcher(GraphStream stream, Count batch_size, StaticMode mode,
                std::optional<PaddingBudget> constant_budget = std::nullopt);

  PaddedBatch next();

  const std::optional<PaddingBudget>& constant_budget() const {
    return constant_budget_;
  }

 private:
  GraphStream stream_;
  Count batch_size_;
  StaticMode mode_;
  std::optional<PaddingBudget> constant_budget_;
  Count step_ = 0;
};

// Accumulates graphs while they fit the budget, reserving one graph slot
// for the dummy and one node so the dummy can host self-loop padding edges;
// the first overflowing graph seeds the next batch. Throws
// GraphExceedsBudget if a single graph alone exceeds node_target - 1 nodes
// or edge_target edges.
class DynamicBatcher {
 public:
  DynamicBatcher(GraphStream stream, PaddingBudget budget);

  PaddedBatch next();

  const PaddingBudget& budget() const { return budget_; }

 private:
  GraphStream stream_;
  PaddingBudget budget_;
  std::optional<Graph> pending_;  // overflow graph carried into the next batch
  Count step_ = 0;
};

}  // namespace graphbatch
