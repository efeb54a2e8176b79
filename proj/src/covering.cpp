#include "holder/covering.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace holder {

namespace {

double center_distance(const BallFamily& family, std::size_t a,
                       std::size_t b) {
  return distance(family.balls[a].center, family.balls[b].center,
                  NormKind::L2);
}

void check_family(const BallFamily& family) {
  if (family.ambient_dim < 1)
    throw std::invalid_argument("ball family: ambient_dim must be >= 1");
  for (const auto& ball : family.balls) {
    if (static_cast<int>(ball.center.size()) != family.ambient_dim)
      throw std::invalid_argument("ball family: center dimension mismatch");
    for (double c : ball.center)
      if (!std::isfinite(c))
        throw std::invalid_argument("ball family: non-finite center");
    if (!(ball.radius > 0.0) || !std::isfinite(ball.radius))
      throw std::invalid_argument("ball family: radius must be positive");
  }
}

}  // namespace

BallFamily load_ball_family_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("empty ball family stream");
  std::vector<std::string> header;
  {
    std::string cur;
    for (char ch : line) {
      if (ch == ',') {
        header.push_back(cur);
        cur.clear();
      } else if (ch != '\r') {
        cur += ch;
      }
    }
    header.push_back(cur);
  }
  if (header.size() < 2)
    throw std::runtime_error("ball family header needs c0,...,r");
  const int dim = static_cast<int>(header.size()) - 1;

  BallFamily family;
  family.ambient_dim = dim;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") {
      ++row;
      continue;
    }
    std::istringstream ls(line);
    std::string field;
    std::vector<double> fields;
    while (std::getline(ls, field, ','))
      fields.push_back(std::stod(field));
    if (static_cast<int>(fields.size()) != dim + 1)
      throw std::runtime_error("ball family row arity at row " +
                               std::to_string(row));
    BallSpec ball;
    ball.center.assign(fields.begin(), fields.end() - 1);
    ball.radius = fields.back();
    family.balls.push_back(std::move(ball));
    ++row;
  }
  check_family(family);
  return family;
}

Selection select_balls(const BallFamily& family, double epsilon,
                       SelectionAudit* audit) {
  check_family(family);
  if (family.balls.empty())
    throw std::invalid_argument("select_balls: empty family");
  if (!(epsilon > 0.0))
    throw std::invalid_argument("select_balls: epsilon must be positive");

  Selection sel;
  sel.epsilon = epsilon;
  std::vector<std::size_t> alive(family.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

  while (!alive.empty()) {
    std::size_t pick = alive.front();
    for (std::size_t i : alive)
      if (family.balls[i].radius > family.balls[pick].radius) pick = i;
    if (audit) {
      audit->steps.push_back(
          {alive, family.balls[pick].radius, pick});
    }
    sel.chosen.push_back(pick);
    std::vector<std::size_t> next;
    next.reserve(alive.size());
    for (std::size_t i : alive) {
      const double d = center_distance(family, i, pick);
      if (d > family.balls[i].radius + family.balls[pick].radius)
        next.push_back(i);
    }
    alive = std::move(next);
  }
  return sel;
}

CoverReport verify_selection(const BallFamily& family, const Selection& sel) {
  if (family.ambient_dim >= 1) check_family(family);
  for (std::size_t idx : sel.chosen)
    if (idx >= family.size())
      throw std::invalid_argument("verify_selection: index out of range");

  CoverReport report;
  for (std::size_t a = 0; a < sel.chosen.size(); ++a)
    for (std::size_t b = a + 1; b < sel.chosen.size(); ++b) {
      const std::size_t i = sel.chosen[a];
      const std::size_t j = sel.chosen[b];
      if (center_distance(family, i, j) <=
          family.balls[i].radius + family.balls[j].radius) {
        report.disjoint = false;
        report.overlapping_pairs.emplace_back(i, j);
      }
    }

  const double factor = 2.0 + sel.epsilon;
  for (std::size_t i = 0; i < family.size(); ++i) {
    bool inside = false;
    for (std::size_t k : sel.chosen) {
      if (center_distance(family, i, k) <=
          factor * family.balls[k].radius) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      report.covered = false;
      report.uncovered.push_back(i);
    }
  }
  return report;
}

}  // namespace holder
