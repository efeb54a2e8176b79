#include "holder/measure.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace holder {

namespace {

constexpr std::size_t kPairCap = 1000000;
constexpr std::size_t kViolationListCap = 50;

std::vector<long long> cell_label(const Point& p, double h) {
  std::vector<long long> label(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    label[i] = static_cast<long long>(std::floor(p[i] / h));
  return label;
}

void check_beta(const SampleFunction& f, double beta) {
  const double expected =
      static_cast<double>(f.domain_dim) / static_cast<double>(f.range_dim);
  if (std::abs(beta - expected) > 1e-12)
    throw std::invalid_argument(
        "beta must equal domain_dim / range_dim = " + std::to_string(expected));
}

void record_violation(BoundReport& report, std::size_t i, std::size_t j,
                      double d, double vd, double allowed) {
  report.hypothesis_ok = false;
  ++report.violation_count;
  if (report.violations.size() < kViolationListCap)
    report.violations.push_back({i, j, d, vd, allowed});
}

}  // namespace

GridMeasureEstimate grid_outer_measure(const std::vector<Point>& points,
                                       double h, int dim) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw std::invalid_argument("grid_outer_measure: h must be positive");
  if (dim < 1) throw std::invalid_argument("grid_outer_measure: dim >= 1");

  std::set<std::vector<long long>> cells;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("grid_outer_measure: point dim mismatch");
    cells.insert(cell_label(p, h));
  }
  GridMeasureEstimate est;
  est.h = h;
  est.dim = dim;
  est.cell_count = cells.size();
  est.value = static_cast<double>(cells.size()) * std::pow(h, dim);
  return est;
}

double default_global_slack(int domain_dim) {
  return 2.0 * std::pow(2.01, domain_dim);
}

BoundReport check_ball_image_bound(const SampleFunction& f,
                                   std::size_t base_index, double r, double M,
                                   double beta, double h) {
  if (base_index >= f.size())
    throw std::invalid_argument("check_ball_image_bound: bad base index");
  if (f.domain_dim < f.range_dim)
    throw std::invalid_argument(
        "check_ball_image_bound: requires domain_dim >= range_dim");
  check_beta(f, beta);
  if (!(r > 0.0)) throw std::invalid_argument("r must be positive");
  if (!(M >= 0.0)) throw std::invalid_argument("M must be nonnegative");

  BoundReport report;
  report.M = M;
  report.beta = beta;
  report.r = r;
  report.h = h;
  report.slack = 1.0;
  report.domain_dim = f.domain_dim;
  report.range_dim = f.range_dim;
  report.base_index = base_index;

  std::vector<Point> image;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = f.domain_distance(base_index, i);
    if (d > r) continue;
    image.push_back(f.values[i]);
    if (i == base_index) continue;
    const double allowed = M * std::pow(d, beta);
    const double vd = f.range_distance(base_index, i);
    ++report.pairs_checked;
    if (vd > allowed) record_violation(report, base_index, i, d, vd, allowed);
  }

  report.lhs = grid_outer_measure(image, h, f.range_dim).value;
  report.rhs = dimension_constant(f.range_dim, f.domain_dim) *
               std::pow(M, f.range_dim) * unit_ball_volume(f.domain_dim) *
               std::pow(r, f.domain_dim);
  report.satisfied = report.lhs <= report.rhs;
  return report;
}

BoundReport check_global_image_bound(const SampleFunction& f, double M,
                                     double beta, double h,
                                     std::optional<double> slack) {
  if (f.domain_dim < f.range_dim)
    throw std::invalid_argument(
        "check_global_image_bound: requires domain_dim >= range_dim");
  check_beta(f, beta);
  if (!(M >= 0.0)) throw std::invalid_argument("M must be nonnegative");
  const double slack_factor =
      slack.has_value() ? *slack : default_global_slack(f.domain_dim);
  if (!(slack_factor >= 1.0))
    throw std::invalid_argument("slack must be >= 1");

  BoundReport report;
  report.M = M;
  report.beta = beta;
  report.r = 0.0;
  report.h = h;
  report.slack = slack_factor;
  report.domain_dim = f.domain_dim;
  report.range_dim = f.range_dim;

  const std::size_t n = f.size();
  const std::size_t total_pairs = n * (n - 1) / 2;
  auto check_pair = [&](std::size_t i, std::size_t j) {
    const double d = f.domain_distance(i, j);
    const double allowed = M * std::pow(d, beta);
    const double vd = f.range_distance(i, j);
    ++report.pairs_checked;
    if (vd > allowed) record_violation(report, i, j, d, vd, allowed);
  };
  if (total_pairs <= kPairCap) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) check_pair(i, j);
  } else {
    report.subsampled = true;
    std::mt19937_64 rng(0x6d656173757265ULL);
    for (std::size_t k = 0; k < kPairCap; ++k) {
      std::size_t i = rng() % n;
      std::size_t j = rng() % n;
      if (i == j) continue;
      check_pair(std::min(i, j), std::max(i, j));
    }
  }

  report.lhs = grid_outer_measure(f.values, h, f.range_dim).value;
  report.rhs = slack_factor *
               dimension_constant(f.range_dim, f.domain_dim) *
               std::pow(M, f.range_dim) *
               grid_outer_measure(f.points, h, f.domain_dim).value;
  report.satisfied = report.lhs <= report.rhs;
  return report;
}

}  // namespace holder
