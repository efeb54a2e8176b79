#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "holder/core.hpp"

namespace holder {

// Value of the oscillation functional Omega(x, r): the infimum of the
// quotients |f(x)-f(x')| / |x-x'|^alpha over sample points x' != x with
// |x-x'| <= r. On an empty candidate set the value is +infinity and there
// is no witness.
struct OmegaValue {
  double value = std::numeric_limits<double>::infinity();
  std::optional<std::size_t> witness_index;

  bool infinite() const { return !witness_index.has_value(); }
};

OmegaValue omega(const SampleFunction& f, std::size_t base_index, double r,
                 double alpha);

// {2^-j : j = 0..40}, the default dyadic radius grid for rho.
std::vector<double> default_radius_grid();

// Largest radius in r_grid at which Omega > 0 (+infinity counts as > 0),
// or 0 when no radius qualifies. Grid radii must lie in (0, 1].
double rho(const SampleFunction& f, std::size_t base_index, double alpha,
           const std::vector<double>& r_grid);

// A pointwise C^{0,alpha} witness: sample indices at strictly decreasing
// distance from the base point, with M the largest quotient
// |f(x)-f(x_k)| / |x-x_k|^alpha over the sequence.
struct HolderCertificate {
  std::size_t base_index = 0;
  double alpha = 1.0;
  std::vector<std::size_t> sequence;
  double M = 0.0;
};

// Greedy construction: starting from the largest distance to the base, pick
// the minimum-quotient point within the current radius, then shrink the
// radius to shrink * (distance just used). Stops after k_max picks or when
// the ball holds no further sample.
HolderCertificate extract_restriction_sequence(const SampleFunction& f,
                                               std::size_t base_index,
                                               double alpha, int k_max,
                                               double shrink = 0.5);

// Recomputes every quotient of cert against f and throws if the stored
// bound M or the distance ordering does not hold.
void validate_certificate(const SampleFunction& f,
                          const HolderCertificate& cert);

struct UniformCertificate {
  std::size_t base_index = 0;
  double alpha = 1.0;
  std::vector<std::size_t> subsequence;
  double M_uniform = 0.0;
  double epsilon = 0.0;
  std::vector<double> delta_schedule;
};

// Largest delta in (0, 1/2] with
//   (1 + (1-delta)^-1)^alpha + (1-delta)^-alpha <= 2^alpha + 1 + epsilon.
double refine_delta(double alpha, double epsilon);

// Thins cert.sequence so that each kept point satisfies
// |x - x'_m| <= delta_m * min_{k<m} |x - x'_k|, which bounds every pairwise
// quotient by (2^alpha + 1 + epsilon) * cert.M.
UniformCertificate refine_uniform(const SampleFunction& f,
                                  const HolderCertificate& cert,
                                  double epsilon);

struct DerivativeCertificate {
  std::size_t base_index = 0;
  std::vector<std::size_t> subsequence;
  double derivative = 0.0;
  double spread = 0.0;
};

// For n = m = 1 and alpha = 1: keeps the densest width-tol window of
// difference quotients (ties toward smaller values) and reports the
// midpoint of the captured range.
DerivativeCertificate extract_derivative(const SampleFunction& f,
                                         const HolderCertificate& cert,
                                         double tol);

// Runs extract_restriction_sequence for each alpha; returns (alpha, M) rows.
std::vector<std::pair<double, double>> holder_exponent_scan(
    const SampleFunction& f, std::size_t base_index,
    const std::vector<double>& alphas, int k_max, double shrink = 0.5);

}  // namespace holder
