#include "holder/counterexample.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace holder {

namespace {

mpz_class integer_power(long base, unsigned long exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return out;
}

void check_shape(int t, int n, int m, long k_min, long k_max) {
  if (t < 2) throw std::invalid_argument("digit base t must be >= 2");
  if (n < 1 || m < 1) throw std::invalid_argument("dimensions must be >= 1");
  if (k_min > k_max) throw std::invalid_argument("k_min must be <= k_max");
}

long floor_div(long a, long b) {
  long q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

}  // namespace

Rational rational_power(long base, long exp) {
  if (base < 2) throw std::invalid_argument("rational_power: base >= 2");
  const mpz_class p = integer_power(base, static_cast<unsigned long>(
                                              exp < 0 ? -exp : exp));
  Rational q = exp >= 0 ? Rational(p) : Rational(1, p);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int DigitArray::digit(long k, int j, int i) const {
  if (k < k_min || k > k_max || j < 0 || j >= n || i < 0 || i >= m)
    throw std::out_of_range("DigitArray::digit: index out of window");
  return digits[(static_cast<std::size_t>(k - k_min) * n + j) * m + i];
}

void DigitArray::set_digit(long k, int j, int i, int value) {
  if (k < k_min || k > k_max || j < 0 || j >= n || i < 0 || i >= m)
    throw std::out_of_range("DigitArray::set_digit: index out of window");
  if (value < 0 || value >= t)
    throw std::invalid_argument("DigitArray::set_digit: digit out of [0, t-1]");
  digits[(static_cast<std::size_t>(k - k_min) * n + j) * m + i] = value;
}

DigitArray make_digit_array(int t, int n, int m, long k_min, long k_max) {
  check_shape(t, n, m, k_min, k_max);
  DigitArray d;
  d.t = t;
  d.n = n;
  d.m = m;
  d.k_min = k_min;
  d.k_max = k_max;
  d.digits.assign(static_cast<std::size_t>(d.depth()) * n * m, 0);
  return d;
}

std::vector<Rational> digits_to_point(const DigitArray& d) {
  // x_j = N_j * t^(-E_max) where N_j collects the digits by Horner over the
  // exponents e = m*k + i in ascending order; E_max = m*k_max + m - 1.
  const long e_max = d.m * d.k_max + d.m - 1;
  std::vector<Rational> x(d.n);
  for (int j = 0; j < d.n; ++j) {
    mpz_class acc = 0;
    for (long k = d.k_min; k <= d.k_max; ++k)
      for (int i = 0; i < d.m; ++i) acc = acc * d.t + d.digit(k, j, i);
    Rational value = Rational(acc) * rational_power(d.t, -e_max);
    value.canonicalize();
    x[j] = value;
  }
  return x;
}

std::vector<Rational> digits_to_image(const DigitArray& d) {
  // f_i = N_i * (t+1)^(-E'_max), exponents e = n*k + j, E'_max = n*k_max+n-1.
  const long e_max = d.n * d.k_max + d.n - 1;
  std::vector<Rational> f(d.m);
  for (int i = 0; i < d.m; ++i) {
    mpz_class acc = 0;
    for (long k = d.k_min; k <= d.k_max; ++k)
      for (int j = 0; j < d.n; ++j) acc = acc * (d.t + 1) + d.digit(k, j, i);
    Rational value = Rational(acc) * rational_power(d.t + 1, -e_max);
    value.canonicalize();
    f[i] = value;
  }
  return f;
}

DigitArray point_to_digits(const std::vector<Rational>& x, int t, int m,
                           long k_min, long k_max) {
  const int n = static_cast<int>(x.size());
  if (n < 1) throw std::invalid_argument("point_to_digits: empty point");
  check_shape(t, n, m, k_min, k_max);

  const long e_min = m * k_min;
  const long e_max = m * k_max + m - 1;
  const mpz_class capacity =
      integer_power(t, static_cast<unsigned long>(e_max - e_min + 1));

  DigitArray d = make_digit_array(t, n, m, k_min, k_max);
  for (int j = 0; j < n; ++j) {
    if (x[j] < 0)
      throw std::domain_error("point_to_digits: coordinates must be >= 0");
    Rational scaled = x[j] * rational_power(t, e_max);
    scaled.canonicalize();
    if (scaled.get_den() != 1)
      throw std::domain_error(
          "point_to_digits: not representable in the window (base mismatch)");
    mpz_class num = scaled.get_num();
    if (num >= capacity)
      throw std::domain_error(
          "point_to_digits: not representable in the window (too shallow)");
    for (long e = e_max; e >= e_min; --e) {
      const mpz_class digit = num % t;
      num /= t;
      const long k = floor_div(e, static_cast<long>(m));
      const int i = static_cast<int>(e - static_cast<long>(m) * k);
      d.set_digit(k, j, i, static_cast<int>(digit.get_si()));
    }
  }
  return d;
}

BoundCheck verify_bounds(const DigitArray& dx, const DigitArray& dy) {
  if (dx.t != dy.t || dx.n != dy.n || dx.m != dy.m || dx.k_min != dy.k_min ||
      dx.k_max != dy.k_max)
    throw std::invalid_argument("verify_bounds: incompatible digit arrays");

  BoundCheck out;
  bool found = false;
  for (long k = dx.k_min; k <= dx.k_max && !found; ++k)
    for (int j = 0; j < dx.n && !found; ++j)
      for (int i = 0; i < dx.m && !found; ++i)
        if (dx.digit(k, j, i) != dy.digit(k, j, i)) {
          out.K = k;
          out.J = j;
          out.I = i;
          found = true;
        }
  if (!found) throw std::invalid_argument("verify_bounds: identical arrays");

  const auto x = digits_to_point(dx);
  const auto y = digits_to_point(dy);
  Rational dist = 0;
  for (int j = 0; j < dx.n; ++j) dist += abs(x[j] - y[j]);
  const auto fx = digits_to_image(dx);
  const auto fy = digits_to_image(dy);
  Rational image_dist = 0;
  for (int i = 0; i < dx.m; ++i) image_dist += abs(fx[i] - fy[i]);

  const Rational upper =
      Rational(dx.n) * rational_power(dx.t, 1 - dx.m * out.K);
  const Rational lower =
      rational_power(dx.t + 1, -(dx.n * out.K + out.J + 1));
  out.upper_ok = dist <= upper;
  out.lower_ok = image_dist >= lower;
  out.distance = dist;
  out.image_distance = image_dist;
  return out;
}

double predicted_step_ratio(int t, int n, int m, double alpha) {
  return std::pow(static_cast<double>(t),
                  alpha * m - n * std::log(t + 1.0) / std::log(t));
}

GrowthReport quotient_probe(int t, int n, int m, double alpha,
                            const std::vector<long>& K_list,
                            std::uint64_t seed) {
  check_shape(t, n, m, 0, 0);
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("quotient_probe: alpha must lie in (0, 1]");
  if (K_list.empty())
    throw std::invalid_argument("quotient_probe: empty K list");
  for (std::size_t i = 1; i < K_list.size(); ++i)
    if (K_list[i] <= K_list[i - 1])
      throw std::invalid_argument("quotient_probe: K list must increase");

  const long k_min = std::min(0L, K_list.front());
  const long k_max = K_list.back() + 2;

  GrowthReport report;
  report.t = t;
  report.n = n;
  report.m = m;
  report.alpha = alpha;
  report.predicted_ratio = predicted_step_ratio(t, n, m, alpha);

  double prev = std::numeric_limits<double>::quiet_NaN();
  for (long K : K_list) {
    DigitArray x = make_digit_array(t, n, m, k_min, k_max);
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(K));
    for (auto& digit : x.digits)
      digit = static_cast<int>(rng() % static_cast<std::uint64_t>(t));
    DigitArray y = x;
    y.set_digit(K, 0, 0, (x.digit(K, 0, 0) + 1) % t);

    const auto check = verify_bounds(x, y);
    const double dist = check.distance.get_d();
    const double image = check.image_distance.get_d();
    const double quotient = image / std::pow(dist, alpha);

    GrowthRow row;
    row.K = K;
    row.quotient = quotient;
    row.ratio_to_prev = quotient / prev;
    report.rows.push_back(row);
    prev = quotient;
  }
  return report;
}

}  // namespace holder
