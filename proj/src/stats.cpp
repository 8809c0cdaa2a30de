#include "graphbatch/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "graphbatch/errors.hpp"

namespace graphbatch {

SampleAggregate aggregate(std::span<const double> values) {
  if (values.empty()) throw EmptyInput("aggregate of empty sample");
  const std::size_t n = values.size();

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  SampleAggregate a;
  a.median = n % 2 == 1 ? sorted[n / 2]
                        : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  a.mean = mean;

  if (n < 2) {
    a.stddev = 0.0;
    a.degenerate = true;
  } else {
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    a.stddev = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return a;
}

TimingAggregate aggregate(const std::vector<TimingRecord>& records) {
  if (records.empty()) throw EmptyInput("aggregate of empty record list");
  std::vector<double> batch, update, combined;
  batch.reserve(records.size());
  update.reserve(records.size());
  combined.reserve(records.size());
  for (const TimingRecord& r : records) {
    batch.push_back(r.batch_time);
    update.push_back(r.update_time);
    combined.push_back(r.combined_time);
  }
  return {aggregate(batch), aggregate(update), aggregate(combined)};
}

double speedup(double t_slow, double t_fast) {
  if (t_fast <= 0.0) throw DivisionByZero("speedup requires t_fast > 0");
  return t_slow / t_fast;
}

namespace {

// Continued fraction for the regularized incomplete beta (modified Lentz).
double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 500;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

TTestResult students_t_test(std::span<const double> a,
                            std::span<const double> b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (na < 2 || nb < 2)
    throw InvalidParams("students_t_test requires at least two samples each");

  auto mean_of = [](std::span<const double> s) {
    double m = 0.0;
    for (double v : s) m += v;
    return m / static_cast<double>(s.size());
  };
  auto ss_of = [](std::span<const double> s, double m) {
    double ss = 0.0;
    for (double v : s) ss += (v - m) * (v - m);
    return ss;
  };

  const double ma = mean_of(a);
  const double mb = mean_of(b);
  const Count df = static_cast<Count>(na + nb - 2);
  const double pooled_var =
      (ss_of(a, ma) + ss_of(b, mb)) / static_cast<double>(df);

  TTestResult r;
  r.degrees_of_freedom = df;
  if (pooled_var <= 0.0) {
    if (ma == mb)
      throw DegenerateSamples("both samples constant with equal means");
    // Constant samples with different means: flag instead of emitting an
    // infinite statistic.
    r.degenerate = true;
    r.t_statistic = ma > mb ? std::numeric_limits<double>::max()
                            : -std::numeric_limits<double>::max();
    r.p_value = 0.0;
    r.significance = Significance::kStrong;
    return r;
  }

  const double se = std::sqrt(pooled_var * (1.0 / static_cast<double>(na) +
                                            1.0 / static_cast<double>(nb)));
  const double t = (ma - mb) / se;
  r.t_statistic = t;
  const double dfd = static_cast<double>(df);
  r.p_value = regularized_incomplete_beta(dfd / 2.0, 0.5, dfd / (dfd + t * t));
  r.significance = r.p_value > 0.10 ? Significance::kNone
                  : r.p_value > 0.05 ? Significance::kModerate
                                     : Significance::kStrong;
  return r;
}

void Histogram::add(double x) {
  const auto bin =
      static_cast<std::int64_t>(std::floor((x - origin) / bin_width));
  ++counts[bin];
  ++total;
}

Histogram histogram(std::span<const double> values, double bin_width,
                    double origin) {
  if (bin_width <= 0.0) throw InvalidBinWidth("bin_width must be positive");
  Histogram h;
  h.bin_width = bin_width;
  h.origin = origin;
  for (double v : values) h.add(v);
  return h;
}

}  // namespace graphbatch
