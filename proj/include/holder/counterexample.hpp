#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace holder {

// Exact rational scalar for digit sums. Backed by GMP.
using Rational = mpq_class;

// t^e for any integer exponent e (t >= 2), as an exact rational.
Rational rational_power(long base, long exp);

std::string to_string(const Rational& q);

// The digit-interleaving family maps x in (R+)^n to f(x) in (R+)^m by
// reading the base-t digits of each coordinate in blocks of m and
// reassembling them per block column in base t+1:
//
//   x_j  = sum_{k,i} t^{-(m k + i)}     d(k, j, i)
//   f_i  = sum_{k,j} (t+1)^{-(n k + j)} d(k, j, i)
//
// A DigitArray stores the digit tensor d(k, j, i) in [0, t-1] over the
// finite depth window k in [k_min, k_max]; digits outside the window are
// zero. Finiteness makes every value exact and the representation
// canonical (no all-(t-1) tails).
struct DigitArray {
  int t = 2;
  int n = 1;
  int m = 1;
  long k_min = 0;
  long k_max = 0;
  std::vector<int> digits;  // dense, ((k - k_min) * n + j) * m + i

  long depth() const { return k_max - k_min + 1; }
  int digit(long k, int j, int i) const;
  void set_digit(long k, int j, int i, int value);

  bool operator==(const DigitArray&) const = default;
};

DigitArray make_digit_array(int t, int n, int m, long k_min, long k_max);

// Exact evaluation of the n domain coordinates over the window.
std::vector<Rational> digits_to_point(const DigitArray& d);

// Exact evaluation of the m image coordinates over the window.
std::vector<Rational> digits_to_image(const DigitArray& d);

// Canonical digit extraction; inverse of digits_to_point for every x that
// is exactly representable in the window (each x_j * t^{m*k_max + m - 1}
// an integer small enough to fit). Anything else throws: failure signals a
// depth or base mismatch, never an approximation.
DigitArray point_to_digits(const std::vector<Rational>& x, int t, int m,
                           long k_min, long k_max);

// Outcome of the two sharpness inequalities at the least differing index
// (K, J, I) in lexicographic (k, j, i) order:
//   upper: |x - y|_1      <= n * t^(1 - m K)
//   lower: |f(x) - f(y)|_1 >= (t+1)^(-n K - J - 1)
// Both comparisons are exact rational arithmetic; no tolerance anywhere.
struct BoundCheck {
  long K = 0;
  int J = 0;
  int I = 0;
  bool upper_ok = false;
  bool lower_ok = false;
  Rational distance;        // |x - y|_1
  Rational image_distance;  // |f(x) - f(y)|_1
};

BoundCheck verify_bounds(const DigitArray& dx, const DigitArray& dy);

// Per-step growth factor t^(alpha m - n log(t+1) / log t) of the quotient
// |f(x)-f(y)|_1 / |x-y|_1^alpha under unit depth steps.
double predicted_step_ratio(int t, int n, int m, double alpha);

struct GrowthRow {
  long K = 0;
  double quotient = 0.0;
  double ratio_to_prev = 0.0;  // NaN on the first row
};

struct GrowthReport {
  int t = 2;
  int n = 1;
  int m = 1;
  double alpha = 1.0;
  std::vector<GrowthRow> rows;
  double predicted_ratio = 0.0;
};

// For each K: draws a seeded random digit array, perturbs the digit at
// (K, 0, 0) by +1 mod t, and evaluates the quotient of the pair exactly
// (the alpha power is applied in floating point to the exact distance).
GrowthReport quotient_probe(int t, int n, int m, double alpha,
                            const std::vector<long>& K_list,
                            std::uint64_t seed);

}  // namespace holder
