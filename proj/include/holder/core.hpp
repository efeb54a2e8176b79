#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace holder {

enum class NormKind { L1, L2, LInf };

NormKind norm_kind_from_string(const std::string& s);
std::string to_string(NormKind k);

// A point of R^d. Dimension is the vector length; all coordinates finite.
using Point = std::vector<double>;

double norm(const Point& p, NormKind kind);
double distance(const Point& a, const Point& b, NormKind kind);

// Lebesgue volume of the Euclidean unit ball in R^k: pi^{k/2} / Gamma(k/2 + 1).
double unit_ball_volume(int k);

// C = mu_n(B1) / mu_m(B1), defined for m >= n >= 1.
double dimension_constant(int n, int m);

// A finite sampled map f: D subset R^n -> R^m. points[i] is a domain point,
// values[i] its image. Immutable after construction; build via make_samples
// or load_samples so the invariants hold (matching lengths, finite entries,
// no two identical domain points).
struct SampleFunction {
  int domain_dim = 0;  // n
  int range_dim = 0;   // m
  std::vector<Point> points;
  std::vector<Point> values;
  NormKind norm_domain = NormKind::L2;
  NormKind norm_range = NormKind::L2;

  std::size_t size() const { return points.size(); }
  double domain_distance(std::size_t i, std::size_t j) const;
  double range_distance(std::size_t i, std::size_t j) const;

  bool operator==(const SampleFunction&) const = default;
};

// Validates dimensions and finiteness, preserves row order, silently drops
// exact duplicate rows and rejects duplicate domain points whose values
// conflict.
SampleFunction make_samples(int n, int m, std::vector<Point> points,
                            std::vector<Point> values,
                            NormKind norm_domain = NormKind::L2,
                            NormKind norm_range = NormKind::L2);

enum class SampleFormat { Csv, Json };

// CSV: header row x0,...,x{n-1},f0,...,f{m-1}, one sample per row.
// JSON: {"n":int,"m":int,"points":[[...]],"values":[[...]]}.
SampleFunction load_samples(std::istream& in, SampleFormat format, int n, int m,
                            NormKind norm_domain = NormKind::L2,
                            NormKind norm_range = NormKind::L2);

std::string to_csv(const SampleFunction& f);
std::string to_json_string(const SampleFunction& f);

// Partial sums of the classical lacunary cosine series
// W(x) = sum_{k=0}^{terms-1} a^k cos(b^k pi x), sampled on the given grid.
// a in (0,1), b odd and >= 3. Warns on stderr when a*b <= 1.
SampleFunction generate_weierstrass(double a, int b, int terms,
                                    const std::vector<double>& grid);

struct BallSpec {
  Point center;
  double radius = 0.0;
};

}  // namespace holder
