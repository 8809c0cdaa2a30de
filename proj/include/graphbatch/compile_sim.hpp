#pragma once

#include <set>
#include <vector>

#include "graphbatch/graph.hpp"

namespace graphbatch {

// Padded (nodes, edges, graphs) triple identifying one compiled kernel shape.
struct ShapeKey {
  Count nodes = 0;
  Count edges = 0;
  Count graphs = 0;

  auto operator<=>(const ShapeKey&) const = default;
};

// Tracks which padded shapes a run has produced, modeling the JIT shape
// cache: each previously unseen shape triggers a (re)compilation.
class ShapeRegistry {
 public:
  struct Event {
    Count step = 0;
    ShapeKey shape;
  };

  // Returns true iff the shape was not previously seen. Steps must be
  // strictly increasing; throws OutOfOrderStep otherwise.
  bool record_step(Count step, const ShapeKey& shape);

  // Distinct shapes minus one: the initial compilation is not a
  // recompilation.
  Count recompilation_count() const;

  Count distinct_shapes() const { return static_cast<Count>(seen_.size()); }
  const std::vector<Event>& events() const { return events_; }

 private:
  std::set<ShapeKey> seen_;
  std::vector<Event> events_;
  Count last_step_ = -1;
};

// Linear stand-in for the gradient-update wall time; coefficients are
// config-supplied durations (the harness uses nanoseconds).
struct CostModel {
  double base_cost = 0.0;
  double node_cost = 0.0;
  double edge_cost = 0.0;
  double compile_penalty = 0.0;
};

double simulate_update_cost(const ShapeKey& shape, const CostModel& model,
                            bool is_new_shape);

}  // namespace graphbatch
