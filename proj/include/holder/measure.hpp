#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "holder/core.hpp"

namespace holder {

// Grid proxy for the outer measure of the continuum set a finite cloud
// discretizes: count the half-open lattice cells [j*h, (j+1)*h)^k touched
// by at least one point, times h^k.
struct GridMeasureEstimate {
  double h = 0.0;
  int dim = 0;
  std::size_t cell_count = 0;
  double value = 0.0;  // cell_count * h^dim
};

GridMeasureEstimate grid_outer_measure(const std::vector<Point>& points,
                                       double h, int dim);

struct PairViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  double domain_dist = 0.0;
  double range_dist = 0.0;
  double allowed = 0.0;  // M * domain_dist^beta
};

struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;  // lhs <= rhs

  bool hypothesis_ok = true;
  std::vector<PairViolation> violations;  // capped sample of offenders
  std::size_t violation_count = 0;
  std::size_t pairs_checked = 0;
  bool subsampled = false;

  // echoed inputs
  double M = 0.0;
  double beta = 0.0;
  double r = 0.0;  // 0 for the global check
  double h = 0.0;
  double slack = 1.0;
  int domain_dim = 0;
  int range_dim = 0;
  std::optional<std::size_t> base_index;
};

// 2 * (2.01)^m, the envelope factor of the global bound at epsilon = 0.01.
double default_global_slack(int domain_dim);

// Ball-image bound: with f sampled on domain dim m, range dim n, m >= n and
// beta = m/n, checks
//   grid measure of f(B_r(base) in samples)
//     <= dimension_constant(n, m) * M^n * unit_ball_volume(m) * r^m.
// The Hoelder hypothesis |f(base)-f(y)| <= M |base-y|^beta is checked for
// every sample in the ball first; failures are flagged in the report, which
// is produced either way.
BoundReport check_ball_image_bound(const SampleFunction& f,
                                   std::size_t base_index, double r, double M,
                                   double beta, double h);

// Global image bound with the envelope slack factor:
//   grid measure of f(samples)
//     <= slack * dimension_constant(n, m) * M^n * grid measure of samples.
// The hypothesis is checked over all sample pairs, randomly subsampled past
// 10^6 pairs (flagged in the report).
BoundReport check_global_image_bound(const SampleFunction& f, double M,
                                     double beta, double h,
                                     std::optional<double> slack = {});

}  // namespace holder
