#include "graphbatch/compile_sim.hpp"

#include <string>

#include "graphbatch/errors.hpp"

namespace graphbatch {

bool ShapeRegistry::record_step(Count step, const ShapeKey& shape) {
  if (step <= last_step_)
    throw OutOfOrderStep("step " + std::to_string(step) +
                         " not greater than last recorded step " +
                         std::to_string(last_step_));
  last_step_ = step;
  const bool is_new = seen_.insert(shape).second;
  if (is_new) events_.push_back({step, shape});
  return is_new;
}

Count ShapeRegistry::recompilation_count() const {
  return seen_.empty() ? 0 : static_cast<Count>(seen_.size()) - 1;
}

double simulate_update_cost(const ShapeKey& shape, const CostModel& model,
                            bool is_new_shape) {
  return model.base_cost + model.node_cost * static_cast<double>(shape.nodes) +
         model.edge_cost * static_cast<double>(shape.edges) +
         (is_new_shape ? model.compile_penalty : 0.0);
}

}  // namespace graphbatch
