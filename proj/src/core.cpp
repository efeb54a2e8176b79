#include "holder/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace holder {

NormKind norm_kind_from_string(const std::string& s) {
  if (s == "l1" || s == "L1") return NormKind::L1;
  if (s == "l2" || s == "L2") return NormKind::L2;
  if (s == "linf" || s == "LINF" || s == "Linf") return NormKind::LInf;
  throw std::invalid_argument("unknown norm kind: " + s);
}

std::string to_string(NormKind k) {
  switch (k) {
    case NormKind::L1:
      return "l1";
    case NormKind::L2:
      return "l2";
    case NormKind::LInf:
      return "linf";
  }
  throw std::logic_error("unreachable");
}

double norm(const Point& p, NormKind kind) {
  switch (kind) {
    case NormKind::L1: {
      double s = 0.0;
      for (double c : p) s += std::abs(c);
      return s;
    }
    case NormKind::L2: {
      double s = 0.0;
      for (double c : p) s += c * c;
      return std::sqrt(s);
    }
    case NormKind::LInf: {
      double s = 0.0;
      for (double c : p) s = std::max(s, std::abs(c));
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

double distance(const Point& a, const Point& b, NormKind kind) {
  if (a.size() != b.size())
    throw std::invalid_argument("distance: dimension mismatch");
  Point diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  return norm(diff, kind);
}

double unit_ball_volume(int k) {
  if (k < 1) throw std::invalid_argument("unit_ball_volume: k must be >= 1");
  const double kd = static_cast<double>(k);
  return std::pow(std::numbers::pi, kd / 2.0) / std::tgamma(kd / 2.0 + 1.0);
}

double dimension_constant(int n, int m) {
  if (n < 1 || m < n)
    throw std::invalid_argument("dimension_constant: requires m >= n >= 1");
  return unit_ball_volume(n) / unit_ball_volume(m);
}

double SampleFunction::domain_distance(std::size_t i, std::size_t j) const {
  return distance(points[i], points[j], norm_domain);
}

double SampleFunction::range_distance(std::size_t i, std::size_t j) const {
  return distance(values[i], values[j], norm_range);
}

namespace {

void check_point(const Point& p, int dim, const char* what, std::size_t row) {
  if (static_cast<int>(p.size()) != dim)
    throw std::runtime_error(std::string(what) + " dimension mismatch at row " +
                             std::to_string(row));
  for (double c : p)
    if (!std::isfinite(c))
      throw std::runtime_error(std::string("non-finite ") + what +
                               " entry at row " + std::to_string(row));
}

}  // namespace

SampleFunction make_samples(int n, int m, std::vector<Point> points,
                            std::vector<Point> values, NormKind norm_domain,
                            NormKind norm_range) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("make_samples: dimensions must be >= 1");
  if (points.size() != values.size())
    throw std::invalid_argument("make_samples: points/values length mismatch");
  if (points.empty())
    throw std::invalid_argument("make_samples: at least one sample required");

  SampleFunction f;
  f.domain_dim = n;
  f.range_dim = m;
  f.norm_domain = norm_domain;
  f.norm_range = norm_range;

  std::map<Point, std::size_t> seen;
  for (std::size_t row = 0; row < points.size(); ++row) {
    check_point(points[row], n, "point", row);
    check_point(values[row], m, "value", row);
    auto [it, inserted] = seen.emplace(points[row], f.points.size());
    if (!inserted) {
      if (f.values[it->second] != values[row])
        throw std::runtime_error(
            "conflicting duplicate domain point at row " + std::to_string(row));
      continue;  // equal duplicate, drop
    }
    f.points.push_back(std::move(points[row]));
    f.values.push_back(std::move(values[row]));
  }
  return f;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_scalar(const std::string& s, std::size_t row) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("unparsable numeric field at row " +
                             std::to_string(row) + ": '" + s + "'");
  }
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos != s.size())
    throw std::runtime_error("unparsable numeric field at row " +
                             std::to_string(row) + ": '" + s + "'");
  return v;
}

SampleFunction load_samples_csv(std::istream& in, int n, int m,
                                NormKind norm_domain, NormKind norm_range) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("empty sample stream");
  const auto header = split_csv_line(line);
  if (static_cast<int>(header.size()) != n + m)
    throw std::runtime_error("header row arity " +
                             std::to_string(header.size()) + ", expected " +
                             std::to_string(n + m));

  std::vector<Point> points, values;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") {
      ++row;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (static_cast<int>(fields.size()) != n + m)
      throw std::runtime_error("row arity " + std::to_string(fields.size()) +
                               " at row " + std::to_string(row) +
                               ", expected " + std::to_string(n + m));
    Point p(n), v(m);
    for (int i = 0; i < n; ++i) p[i] = parse_scalar(fields[i], row);
    for (int i = 0; i < m; ++i) v[i] = parse_scalar(fields[n + i], row);
    points.push_back(std::move(p));
    values.push_back(std::move(v));
    ++row;
  }
  return make_samples(n, m, std::move(points), std::move(values), norm_domain,
                      norm_range);
}

SampleFunction load_samples_json(std::istream& in, int n, int m,
                                 NormKind norm_domain, NormKind norm_range) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid sample JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("m") ||
      !j.contains("points") || !j.contains("values"))
    throw std::runtime_error("sample JSON must have n, m, points, values");
  if (j["n"].get<int>() != n || j["m"].get<int>() != m)
    throw std::runtime_error("sample JSON dimensions (" +
                             std::to_string(j["n"].get<int>()) + "," +
                             std::to_string(j["m"].get<int>()) +
                             ") do not match declared (" + std::to_string(n) +
                             "," + std::to_string(m) + ")");
  std::vector<Point> points, values;
  for (const auto& row : j["points"]) points.push_back(row.get<Point>());
  for (const auto& row : j["values"]) values.push_back(row.get<Point>());
  return make_samples(n, m, std::move(points), std::move(values), norm_domain,
                      norm_range);
}

}  // namespace

SampleFunction load_samples(std::istream& in, SampleFormat format, int n,
                            int m, NormKind norm_domain, NormKind norm_range) {
  switch (format) {
    case SampleFormat::Csv:
      return load_samples_csv(in, n, m, norm_domain, norm_range);
    case SampleFormat::Json:
      return load_samples_json(in, n, m, norm_domain, norm_range);
  }
  throw std::logic_error("unreachable");
}

std::string to_csv(const SampleFunction& f) {
  std::ostringstream out;
  for (int i = 0; i < f.domain_dim; ++i) out << (i ? ",x" : "x") << i;
  for (int i = 0; i < f.range_dim; ++i) out << ",f" << i;
  out << "\n";
  char buf[64];
  for (std::size_t row = 0; row < f.size(); ++row) {
    bool first = true;
    for (double c : f.points[row]) {
      std::snprintf(buf, sizeof buf, "%.17g", c);
      out << (first ? "" : ",") << buf;
      first = false;
    }
    for (double c : f.values[row]) {
      std::snprintf(buf, sizeof buf, "%.17g", c);
      out << "," << buf;
    }
    out << "\n";
  }
  return out.str();
}

std::string to_json_string(const SampleFunction& f) {
  nlohmann::json j{{"n", f.domain_dim},
                   {"m", f.range_dim},
                   {"points", f.points},
                   {"values", f.values}};
  return j.dump();
}

SampleFunction generate_weierstrass(double a, int b, int terms,
                                    const std::vector<double>& grid) {
  if (!(a > 0.0 && a < 1.0))
    throw std::invalid_argument("generate_weierstrass: a must be in (0,1)");
  if (b < 3 || b % 2 == 0)
    throw std::invalid_argument(
        "generate_weierstrass: b must be an odd integer >= 3");
  if (terms < 1)
    throw std::invalid_argument("generate_weierstrass: terms must be >= 1");
  if (grid.empty())
    throw std::invalid_argument("generate_weierstrass: empty grid");
  if (a * b <= 1.0)
    std::fprintf(stderr,
                 "generate_weierstrass: a*b = %g <= 1, series is smooth\n",
                 a * b);

  std::vector<Point> points, values;
  points.reserve(grid.size());
  values.reserve(grid.size());
  for (double x : grid) {
    double w = 0.0;
    double ak = 1.0;
    double bk = 1.0;
    for (int k = 0; k < terms; ++k) {
      w += ak * std::cos(bk * std::numbers::pi * x);
      ak *= a;
      bk *= b;
    }
    points.push_back({x});
    values.push_back({w});
  }
  return make_samples(1, 1, std::move(points), std::move(values));
}

}  // namespace holder
