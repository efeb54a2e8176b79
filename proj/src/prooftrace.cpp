#include "holder/prooftrace.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "holder/oscillation.hpp"

namespace holder {

namespace {

// Picks the largest bin; ties go to the lowest (lexicographically smallest)
// label, which is the map iteration order.
template <typename Map>
typename Map::const_iterator largest_bin(const Map& bins) {
  auto best = bins.begin();
  for (auto it = bins.begin(); it != bins.end(); ++it)
    if (it->second.size() > best->second.size()) best = it;
  return best;
}

}  // namespace

std::vector<std::size_t> build_candidate_set(const SampleFunction& f,
                                             double alpha, double omega_min,
                                             double r_min) {
  if (!(omega_min > 0.0))
    throw std::invalid_argument("build_candidate_set: omega_min > 0 required");
  if (!(r_min > 0.0))
    throw std::invalid_argument("build_candidate_set: r_min > 0 required");
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (omega(f, i, r_min, alpha).value >= omega_min) candidates.push_back(i);
  return candidates;
}

PipelineTrace partition_pipeline(const SampleFunction& f,
                                 const std::vector<std::size_t>& candidate_set,
                                 double alpha,
                                 const std::vector<double>& r_grid,
                                 double omega_min, double r_min) {
  if (candidate_set.empty())
    throw std::invalid_argument("partition_pipeline: empty candidate set");
  for (std::size_t i : candidate_set)
    if (i >= f.size())
      throw std::invalid_argument("partition_pipeline: index out of range");

  PipelineTrace trace;
  trace.candidate_set = candidate_set;
  trace.omega_min = omega_min;
  trace.r_min = r_min;

  // stage 1: integer unit box of the sampled value
  for (std::size_t i : candidate_set) {
    std::vector<long long> label(f.range_dim);
    for (int c = 0; c < f.range_dim; ++c)
      label[c] = static_cast<long long>(std::floor(f.values[i][c]));
    trace.value_bins[label].push_back(i);
  }
  {
    auto best = largest_bin(trace.value_bins);
    trace.selected_value_bin = best->first;
    trace.bounded_set = best->second;
  }

  // stage 2: dyadic exponent of rho; rho = 0 points cannot proceed
  for (std::size_t i : trace.bounded_set) {
    const double rho_i = rho(f, i, alpha, r_grid);
    if (rho_i == 0.0) {
      trace.dropped_zero_rho.push_back(i);
      continue;
    }
    int exp;
    std::frexp(rho_i, &exp);  // rho_i in [2^(exp-1), 2^exp)
    trace.rho_bins[exp - 1].push_back(i);
  }
  if (trace.rho_bins.empty())
    throw std::runtime_error("partition_pipeline: all points dropped at stage 2");
  {
    auto best = largest_bin(trace.rho_bins);
    trace.rho_exponent = best->first;
    trace.rho = std::ldexp(1.0, best->first);
    trace.rho_set = best->second;
  }

  // stage 3: half-open spatial cells (l*rho, (l+1)*rho] of side rho
  for (std::size_t i : trace.rho_set) {
    std::vector<long long> label(f.domain_dim);
    for (int c = 0; c < f.domain_dim; ++c)
      label[c] =
          static_cast<long long>(std::ceil(f.points[i][c] / trace.rho)) - 1;
    trace.cells[label].push_back(i);
  }
  {
    auto best = largest_bin(trace.cells);
    trace.selected_cell = best->first;
    trace.final_set = best->second;
  }

  std::set<Point> distinct_values;
  for (std::size_t i : trace.final_set) distinct_values.insert(f.values[i]);
  trace.injective = distinct_values.size() == trace.final_set.size();
  return trace;
}

std::string format_trace_summary(const PipelineTrace& trace) {
  std::ostringstream out;
  out << "stage 0  candidate set E: " << trace.candidate_set.size()
      << " points\n";
  out << "stage 1  value boxes: " << trace.value_bins.size()
      << " bins, selected bin [";
  for (std::size_t i = 0; i < trace.selected_value_bin.size(); ++i)
    out << (i ? "," : "") << trace.selected_value_bin[i];
  out << "] with " << trace.bounded_set.size() << " points\n";
  out << "stage 2  rho binning: " << trace.rho_bins.size()
      << " dyadic bins (dropped " << trace.dropped_zero_rho.size()
      << " with rho = 0), selected rho = 2^" << trace.rho_exponent << " = "
      << trace.rho << " with " << trace.rho_set.size() << " points\n";
  out << "stage 3  spatial cells of side rho: " << trace.cells.size()
      << " cells, selected cell [";
  for (std::size_t i = 0; i < trace.selected_cell.size(); ++i)
    out << (i ? "," : "") << trace.selected_cell[i];
  out << "] with " << trace.final_set.size() << " points\n";
  out << "injectivity on E': " << (trace.injective ? "injective" : "NOT injective")
      << "\n";
  return out.str();
}

}  // namespace holder
