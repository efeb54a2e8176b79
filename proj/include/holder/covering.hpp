#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "holder/core.hpp"

namespace holder {

struct BallFamily {
  std::vector<BallSpec> balls;
  int ambient_dim = 0;

  std::size_t size() const { return balls.size(); }
};

// CSV columns c0,...,c{d-1},r with a header row; dimension inferred.
BallFamily load_ball_family_csv(std::istream& in);

struct Selection {
  std::vector<std::size_t> chosen;
  double epsilon = 0.0;
};

// Per-step record of the greedy loop: the surviving candidate set X_k, the
// largest radius in it, and the index taken.
struct SelectionAuditStep {
  std::vector<std::size_t> candidates;
  double max_radius = 0.0;
  std::size_t chosen = 0;
};

struct SelectionAudit {
  std::vector<SelectionAuditStep> steps;
};

// Greedy disjoint selection: repeatedly restrict to balls whose closed ball
// meets none of the chosen ones, then take the largest radius (ties by
// lowest index). On a finite family the exact maximum trivially satisfies
// the (1+epsilon)-near-maximal rule; epsilon still scales the cover factor
// checked by verify_selection. Centers use the Euclidean norm.
Selection select_balls(const BallFamily& family, double epsilon,
                       SelectionAudit* audit = nullptr);

struct CoverReport {
  bool disjoint = true;
  bool covered = true;
  std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs;
  std::vector<std::size_t> uncovered;
};

// disjoint: chosen closed balls are pairwise disjoint (center distance
// strictly above the radius sum). covered: every family center lies in some
// chosen ball enlarged by factor (2 + epsilon).
CoverReport verify_selection(const BallFamily& family, const Selection& sel);

}  // namespace holder
