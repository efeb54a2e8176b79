#include "holder/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace holder {

Json to_json(const SampleFunction& f) {
  return Json{{"n", f.domain_dim},
              {"m", f.range_dim},
              {"points", f.points},
              {"values", f.values}};
}

Json to_json(const HolderCertificate& cert) {
  return Json{{"base", cert.base_index},
              {"alpha", cert.alpha},
              {"sequence", cert.sequence},
              {"M", cert.M}};
}

HolderCertificate holder_certificate_from_json(const Json& j) {
  HolderCertificate cert;
  cert.base_index = j.at("base").get<std::size_t>();
  cert.alpha = j.at("alpha").get<double>();
  cert.sequence = j.at("sequence").get<std::vector<std::size_t>>();
  cert.M = j.at("M").get<double>();
  return cert;
}

Json to_json(const UniformCertificate& cert) {
  return Json{{"base", cert.base_index},
              {"alpha", cert.alpha},
              {"sequence", cert.subsequence},
              {"M_uniform", cert.M_uniform},
              {"epsilon", cert.epsilon},
              {"delta_schedule", cert.delta_schedule}};
}

Json to_json(const DerivativeCertificate& cert) {
  return Json{{"base", cert.base_index},
              {"sequence", cert.subsequence},
              {"derivative", cert.derivative},
              {"spread", cert.spread}};
}

Json to_json(const Selection& sel) {
  return Json{{"epsilon", sel.epsilon}, {"chosen", sel.chosen}};
}

Selection selection_from_json(const Json& j) {
  Selection sel;
  sel.epsilon = j.at("epsilon").get<double>();
  sel.chosen = j.at("chosen").get<std::vector<std::size_t>>();
  return sel;
}

Json to_json(const CoverReport& report) {
  Json pairs = Json::array();
  for (const auto& [a, b] : report.overlapping_pairs)
    pairs.push_back(Json::array({a, b}));
  return Json{{"disjoint", report.disjoint},
              {"covered", report.covered},
              {"overlapping_pairs", pairs},
              {"uncovered", report.uncovered}};
}

Json to_json(const GridMeasureEstimate& est) {
  return Json{{"h", est.h},
              {"dim", est.dim},
              {"cell_count", est.cell_count},
              {"value", est.value}};
}

Json to_json(const BoundReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back(Json{{"i", v.i},
                              {"j", v.j},
                              {"domain_dist", v.domain_dist},
                              {"range_dist", v.range_dist},
                              {"allowed", v.allowed}});
  Json j{{"lhs", report.lhs},
         {"rhs", report.rhs},
         {"satisfied", report.satisfied},
         {"hypothesis_ok", report.hypothesis_ok},
         {"violations", violations},
         {"violation_count", report.violation_count},
         {"pairs_checked", report.pairs_checked},
         {"subsampled", report.subsampled},
         {"M", report.M},
         {"beta", report.beta},
         {"h", report.h},
         {"slack", report.slack},
         {"domain_dim", report.domain_dim},
         {"range_dim", report.range_dim}};
  if (report.base_index) {
    j["base"] = *report.base_index;
    j["r"] = report.r;
  }
  return j;
}

Json to_json(const DigitArray& d) {
  Json digits = Json::array();
  for (long k = d.k_min; k <= d.k_max; ++k)
    for (int j = 0; j < d.n; ++j)
      for (int i = 0; i < d.m; ++i)
        if (d.digit(k, j, i) != 0)
          digits.push_back(Json::array({k, j, i, d.digit(k, j, i)}));
  return Json{{"t", d.t},       {"n", d.n},
              {"m", d.m},       {"k_min", d.k_min},
              {"k_max", d.k_max}, {"digits", digits}};
}

DigitArray digit_array_from_json(const Json& j) {
  DigitArray d = make_digit_array(
      j.at("t").get<int>(), j.at("n").get<int>(), j.at("m").get<int>(),
      j.at("k_min").get<long>(), j.at("k_max").get<long>());
  for (const auto& entry : j.at("digits")) {
    if (!entry.is_array() || entry.size() != 4)
      throw std::runtime_error("digit entries must be [k, j, i, value]");
    d.set_digit(entry[0].get<long>(), entry[1].get<int>(),
                entry[2].get<int>(), entry[3].get<int>());
  }
  return d;
}

Json to_json(const BoundCheck& check) {
  return Json{{"K", check.K},
              {"J", check.J},
              {"I", check.I},
              {"upper_ok", check.upper_ok},
              {"lower_ok", check.lower_ok},
              {"distance", to_string(check.distance)},
              {"image_distance", to_string(check.image_distance)}};
}

Json to_json(const GrowthReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r{{"K", row.K}, {"quotient", row.quotient}};
    if (std::isfinite(row.ratio_to_prev)) r["ratio"] = row.ratio_to_prev;
    rows.push_back(r);
  }
  return Json{{"t", report.t},
              {"n", report.n},
              {"m", report.m},
              {"alpha", report.alpha},
              {"predicted_ratio", report.predicted_ratio},
              {"rows", rows}};
}

std::string growth_report_csv(const GrowthReport& report) {
  std::ostringstream out;
  out << "K,quotient,ratio,predicted\n";
  char buf[64];
  for (const auto& row : report.rows) {
    out << row.K << ",";
    std::snprintf(buf, sizeof buf, "%.17g", row.quotient);
    out << buf << ",";
    if (std::isfinite(row.ratio_to_prev)) {
      std::snprintf(buf, sizeof buf, "%.17g", row.ratio_to_prev);
      out << buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g", report.predicted_ratio);
    out << "," << buf << "\n";
  }
  return out.str();
}

namespace {

Json histogram_json(const std::map<std::vector<long long>,
                                   std::vector<std::size_t>>& bins) {
  Json out = Json::array();
  for (const auto& [label, indices] : bins)
    out.push_back(Json{{"label", label}, {"count", indices.size()}});
  return out;
}

}  // namespace

Json to_json(const PipelineTrace& trace) {
  Json rho_bins = Json::array();
  for (const auto& [exp, indices] : trace.rho_bins)
    rho_bins.push_back(Json{{"exponent", exp}, {"count", indices.size()}});
  return Json{{"candidate_set", trace.candidate_set},
              {"value_bins", histogram_json(trace.value_bins)},
              {"selected_value_bin", trace.selected_value_bin},
              {"bounded_set", trace.bounded_set},
              {"dropped_zero_rho", trace.dropped_zero_rho},
              {"rho_bins", rho_bins},
              {"rho_exponent", trace.rho_exponent},
              {"rho", trace.rho},
              {"rho_set", trace.rho_set},
              {"cells", histogram_json(trace.cells)},
              {"selected_cell", trace.selected_cell},
              {"final_set", trace.final_set},
              {"injective", trace.injective},
              {"omega_min", trace.omega_min},
              {"r_min", trace.r_min}};
}

void atomic_write_file(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << contents;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace holder
