#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "graphbatch/graph.hpp"

namespace graphbatch {

struct TimingRecord {
  Count step_index = 0;
  double batch_time = 0.0;
  double update_time = 0.0;
  double combined_time = 0.0;  // = batch_time + update_time
};

struct SampleAggregate {
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;     // n-1 denominator; 0 for a single sample
  bool degenerate = false; // true when stddev is undefined (n < 2)
};

struct TimingAggregate {
  SampleAggregate batch;
  SampleAggregate update;
  SampleAggregate combined;
};

SampleAggregate aggregate(std::span<const double> values);
TimingAggregate aggregate(const std::vector<TimingRecord>& records);

// t_slow / t_fast; throws DivisionByZero when t_fast <= 0.
double speedup(double t_slow, double t_fast);

enum class Significance { kNone, kModerate, kStrong };

struct TTestResult {
  double t_statistic = 0.0;
  Count degrees_of_freedom = 0;
  double p_value = 1.0;  // two-sided
  Significance significance = Significance::kNone;
  bool degenerate = false;  // pooled variance was zero with unequal means
};

// Pooled-variance two-sample Student's t-test with two-sided p-value.
// Throws DegenerateSamples when both samples have zero variance and equal
// means (t undefined); zero pooled variance with unequal means returns a
// flagged result with p = 0 instead of an infinite statistic.
TTestResult students_t_test(std::span<const double> a,
                            std::span<const double> b);

// Regularized incomplete beta I_x(a, b), absolute error <= 1e-9.
double regularized_incomplete_beta(double a, double b, double x);

// Half-open bins [lo, hi): sample x lands in floor((x - origin) / bin_width).
struct Histogram {
  double bin_width = 1.0;
  double origin = 0.0;
  std::map<std::int64_t, Count> counts;
  Count total = 0;

  void add(double x);
  double bin_lower(std::int64_t bin) const { return origin + bin_width * static_cast<double>(bin); }
};

Histogram histogram(std::span<const double> values, double bin_width,
                    double origin = 0.0);

}  // namespace graphbatch
