#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "holder/core.hpp"

namespace holder {

// One run of the partition pipeline over a candidate index set E:
//
//   stage 1  bin E by the integer unit box of f(x) in Z^m, keep a largest
//            bin (the bounded-image set)
//   stage 2  compute rho(x) per point, drop rho = 0, bin by the dyadic
//            exponent rho(x) in [2^k, 2^{k+1}), keep a largest bin and set
//            rho = 2^k
//   stage 3  bin by the half-open spatial cell (l*rho, (l+1)*rho] per
//            coordinate, keep a largest cell
//
// and an injectivity check of the sampled values on the final set. Ties
// between equal-size bins go to the lowest label. Bins at every stage
// partition the incoming set.
struct PipelineTrace {
  std::vector<std::size_t> candidate_set;  // E

  std::map<std::vector<long long>, std::vector<std::size_t>> value_bins;
  std::vector<long long> selected_value_bin;
  std::vector<std::size_t> bounded_set;  // selected stage-1 bin

  std::vector<std::size_t> dropped_zero_rho;
  std::map<int, std::vector<std::size_t>> rho_bins;
  int rho_exponent = 0;
  double rho = 0.0;  // 2^rho_exponent
  std::vector<std::size_t> rho_set;  // selected stage-2 bin

  std::map<std::vector<long long>, std::vector<std::size_t>> cells;
  std::vector<long long> selected_cell;
  std::vector<std::size_t> final_set;  // selected stage-3 cell

  bool injective = false;

  // thresholds echoed from the candidate-set construction
  double omega_min = 0.0;
  double r_min = 0.0;
};

// E = indices whose oscillation at radius r_min is at least omega_min
// (+infinity qualifies).
std::vector<std::size_t> build_candidate_set(const SampleFunction& f,
                                             double alpha, double omega_min,
                                             double r_min);

// Runs the three partition stages plus the injectivity check. omega_min and
// r_min are echoed into the trace only. Throws when E is empty or every
// point is dropped at stage 2.
PipelineTrace partition_pipeline(const SampleFunction& f,
                                 const std::vector<std::size_t>& candidate_set,
                                 double alpha,
                                 const std::vector<double>& r_grid,
                                 double omega_min = 0.0, double r_min = 0.0);

// Stage-by-stage text rendering for terminal output.
std::string format_trace_summary(const PipelineTrace& trace);

}  // namespace holder
