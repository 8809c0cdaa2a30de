#include "graphbatch/stream.hpp"

#include <numeric>

#include "graphbatch/errors.hpp"
#include "graphbatch/rng.hpp"

namespace graphbatch {

GraphStream::GraphStream(std::shared_ptr<const std::vector<Graph>> dataset,
                         std::uint64_t seed)
    : dataset_(std::move(dataset)), seed_(seed) {
  if (!dataset_ || dataset_->empty())
    throw EmptyDataset("cannot stream from an empty dataset");
  order_.resize(dataset_->size());
  reshuffle();
}

void GraphStream::reshuffle() {
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  // Fisher-Yates with a per-epoch seed.
  Rng rng(mix_seed(seed_, epoch_));
  for (std::size_t i = order_.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(order_[i - 1], order_[j]);
  }
}

const Graph& GraphStream::next() {
  if (cursor_ == order_.size()) {
    cursor_ = 0;
    ++epoch_;
    reshuffle();
  }
  return (*dataset_)[order_[cursor_++]];
}

GraphStream cycle_shuffle_stream(
    std::shared_ptr<const std::vector<Graph>> dataset, std::uint64_t seed) {
  return GraphStream(std::move(dataset), seed);
}

}  // namespace graphbatch
