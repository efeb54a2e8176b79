#include "holder/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace holder {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in (0, 1]");
}

void check_base(const SampleFunction& f, std::size_t base_index) {
  if (base_index >= f.size())
    throw std::invalid_argument("base index out of range");
}

double quotient(const SampleFunction& f, std::size_t base, std::size_t other,
                double alpha) {
  const double d = f.domain_distance(base, other);
  return f.range_distance(base, other) / std::pow(d, alpha);
}

}  // namespace

OmegaValue omega(const SampleFunction& f, std::size_t base_index, double r,
                 double alpha) {
  check_base(f, base_index);
  check_alpha(alpha);
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("omega: r must be positive and finite");

  OmegaValue best;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i == base_index) continue;
    if (f.domain_distance(base_index, i) > r) continue;
    const double q = quotient(f, base_index, i, alpha);
    if (!best.witness_index || q < best.value) {
      best.value = q;
      best.witness_index = i;
    }
  }
  return best;
}

std::vector<double> default_radius_grid() {
  std::vector<double> grid;
  grid.reserve(41);
  for (int j = 0; j <= 40; ++j) grid.push_back(std::ldexp(1.0, -j));
  return grid;
}

double rho(const SampleFunction& f, std::size_t base_index, double alpha,
           const std::vector<double>& r_grid) {
  check_base(f, base_index);
  check_alpha(alpha);
  if (r_grid.empty()) throw std::invalid_argument("rho: empty radius grid");
  for (double r : r_grid)
    if (!(r > 0.0 && r <= 1.0))
      throw std::invalid_argument("rho: radii must lie in (0, 1]");

  // One pass over the samples, then a prefix minimum in distance order.
  std::vector<std::pair<double, double>> dist_quot;
  dist_quot.reserve(f.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i == base_index) continue;
    dist_quot.emplace_back(f.domain_distance(base_index, i),
                           quotient(f, base_index, i, alpha));
  }
  std::sort(dist_quot.begin(), dist_quot.end());
  std::vector<double> prefix_min(dist_quot.size());
  double running = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < dist_quot.size(); ++i) {
    running = std::min(running, dist_quot[i].second);
    prefix_min[i] = running;
  }

  double best = 0.0;
  for (double r : r_grid) {
    auto it = std::upper_bound(
        dist_quot.begin(), dist_quot.end(), r,
        [](double value, const auto& entry) { return value < entry.first; });
    const std::size_t count = static_cast<std::size_t>(it - dist_quot.begin());
    const bool positive = count == 0 || prefix_min[count - 1] > 0.0;
    if (positive) best = std::max(best, r);
  }
  return best;
}

HolderCertificate extract_restriction_sequence(const SampleFunction& f,
                                               std::size_t base_index,
                                               double alpha, int k_max,
                                               double shrink) {
  check_base(f, base_index);
  check_alpha(alpha);
  if (f.size() < 2)
    throw std::invalid_argument(
        "extract_restriction_sequence: need at least two samples");
  if (k_max < 1)
    throw std::invalid_argument("extract_restriction_sequence: k_max >= 1");
  if (!(shrink > 0.0 && shrink < 1.0))
    throw std::invalid_argument(
        "extract_restriction_sequence: shrink must lie in (0, 1)");

  double r = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (i != base_index) r = std::max(r, f.domain_distance(base_index, i));
  if (r <= 0.0)
    throw std::runtime_error(
        "extract_restriction_sequence: base has no distinct neighbors");

  HolderCertificate cert;
  cert.base_index = base_index;
  cert.alpha = alpha;
  for (int k = 0; k < k_max; ++k) {
    const OmegaValue pick = omega(f, base_index, r, alpha);
    if (pick.infinite()) break;  // ball emptied
    cert.sequence.push_back(*pick.witness_index);
    cert.M = std::max(cert.M, pick.value);
    r = shrink * f.domain_distance(base_index, *pick.witness_index);
  }
  return cert;
}

void validate_certificate(const SampleFunction& f,
                          const HolderCertificate& cert) {
  check_base(f, cert.base_index);
  check_alpha(cert.alpha);
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t k : cert.sequence) {
    if (k >= f.size() || k == cert.base_index)
      throw std::invalid_argument("certificate: bad sequence index");
    const double d = f.domain_distance(cert.base_index, k);
    if (!(d < prev))
      throw std::invalid_argument(
          "certificate: distances not strictly decreasing");
    prev = d;
    if (quotient(f, cert.base_index, k, cert.alpha) >
        cert.M * (1.0 + 1e-9) + 1e-300)
      throw std::invalid_argument("certificate: quotient exceeds stored M");
  }
}

double refine_delta(double alpha, double epsilon) {
  check_alpha(alpha);
  if (!(epsilon > 0.0))
    throw std::invalid_argument("refine_delta: epsilon must be positive");
  const double target = std::pow(2.0, alpha) + 1.0 + epsilon;
  auto factor = [alpha](double delta) {
    const double inv = 1.0 / (1.0 - delta);
    return std::pow(1.0 + inv, alpha) + std::pow(inv, alpha);
  };
  double lo = 0.0, hi = 1.0 - 1e-12;
  if (factor(hi) <= target) return 0.5;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (factor(mid) <= target)
      lo = mid;
    else
      hi = mid;
  }
  return std::min(lo, 0.5);
}

UniformCertificate refine_uniform(const SampleFunction& f,
                                  const HolderCertificate& cert,
                                  double epsilon) {
  validate_certificate(f, cert);
  if (!(epsilon > 0.0))
    throw std::invalid_argument("refine_uniform: epsilon must be positive");

  UniformCertificate out;
  out.base_index = cert.base_index;
  out.alpha = cert.alpha;
  out.epsilon = epsilon;
  if (cert.sequence.empty()) return out;

  const double delta = refine_delta(cert.alpha, epsilon);
  out.subsequence.push_back(cert.sequence.front());
  double min_dist = f.domain_distance(cert.base_index, cert.sequence.front());
  for (std::size_t i = 1; i < cert.sequence.size(); ++i) {
    const double d = f.domain_distance(cert.base_index, cert.sequence[i]);
    if (d <= delta * min_dist) {
      out.subsequence.push_back(cert.sequence[i]);
      out.delta_schedule.push_back(delta);
      min_dist = d;  // distances decrease along the sequence
    }
  }

  // all pairwise quotients over {base} union subsequence
  std::vector<std::size_t> pts = out.subsequence;
  pts.push_back(cert.base_index);
  double m_uniform = 0.0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      const double d = f.domain_distance(pts[a], pts[b]);
      m_uniform = std::max(
          m_uniform, f.range_distance(pts[a], pts[b]) / std::pow(d, cert.alpha));
    }
  out.M_uniform = m_uniform;
  return out;
}

DerivativeCertificate extract_derivative(const SampleFunction& f,
                                         const HolderCertificate& cert,
                                         double tol) {
  if (f.domain_dim != 1 || f.range_dim != 1)
    throw std::invalid_argument("extract_derivative: requires n = m = 1");
  if (cert.alpha != 1.0)
    throw std::invalid_argument("extract_derivative: requires alpha = 1");
  if (cert.sequence.empty())
    throw std::invalid_argument("extract_derivative: empty certificate");
  if (!(tol > 0.0))
    throw std::invalid_argument("extract_derivative: tol must be positive");
  validate_certificate(f, cert);

  const double x0 = f.points[cert.base_index][0];
  const double f0 = f.values[cert.base_index][0];
  std::vector<double> quotients(cert.sequence.size());
  for (std::size_t i = 0; i < cert.sequence.size(); ++i) {
    const std::size_t k = cert.sequence[i];
    quotients[i] = (f.values[k][0] - f0) / (f.points[k][0] - x0);
  }

  // densest width-tol window over the sorted quotients, ties toward the
  // smaller anchor
  std::vector<double> sorted = quotients;
  std::sort(sorted.begin(), sorted.end());
  std::size_t best_count = 0;
  double best_lo = sorted.front();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto hi = std::upper_bound(sorted.begin() + i, sorted.end(),
                                     sorted[i] + tol);
    const std::size_t count = static_cast<std::size_t>(hi - sorted.begin()) - i;
    if (count > best_count) {
      best_count = count;
      best_lo = sorted[i];
    }
  }

  DerivativeCertificate out;
  out.base_index = cert.base_index;
  double qmin = std::numeric_limits<double>::infinity();
  double qmax = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    if (quotients[i] >= best_lo && quotients[i] <= best_lo + tol) {
      out.subsequence.push_back(cert.sequence[i]);
      qmin = std::min(qmin, quotients[i]);
      qmax = std::max(qmax, quotients[i]);
    }
  }
  out.derivative = 0.5 * (qmin + qmax);
  out.spread = qmax - qmin;
  return out;
}

std::vector<std::pair<double, double>> holder_exponent_scan(
    const SampleFunction& f, std::size_t base_index,
    const std::vector<double>& alphas, int k_max, double shrink) {
  std::vector<std::pair<double, double>> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    const auto cert =
        extract_restriction_sequence(f, base_index, alpha, k_max, shrink);
    rows.emplace_back(alpha, cert.M);
  }
  return rows;
}

}  // namespace holder
