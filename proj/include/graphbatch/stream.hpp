#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "graphbatch/graph.hpp"

namespace graphbatch {

// Infinite deterministic stream over a finite dataset. Each epoch is a
// seeded permutation of the dataset, so a full pass yields every graph
// exactly once per epoch. Same seed, same stream.
class GraphStream {
 public:
  GraphStream(std::shared_ptr<const std::vector<Graph>> dataset,
              std::uint64_t seed);

  const Graph& next();

  std::size_t dataset_size() const { return dataset_->size(); }

 private:
  void reshuffle();

  std::shared_ptr<const std::vector<Graph>> dataset_;
  std::uint64_t seed_;
  std::uint64_t epoch_ = 0;
  std::size_t cursor_ = 0;
  std::vector<std::size_t> order_;
};

GraphStream cycle_shuffle_stream(
    std::shared_ptr<const std::vector<Graph>> dataset, std::uint64_t seed);

}  // namespace graphbatch
