#pragma once

#include <string>

#include <json.hpp>

#include "holder/core.hpp"
#include "holder/counterexample.hpp"
#include "holder/covering.hpp"
#include "holder/measure.hpp"
#include "holder/oscillation.hpp"
#include "holder/prooftrace.hpp"

namespace holder {

using Json = nlohmann::json;

Json to_json(const SampleFunction& f);

Json to_json(const HolderCertificate& cert);
HolderCertificate holder_certificate_from_json(const Json& j);

Json to_json(const UniformCertificate& cert);
Json to_json(const DerivativeCertificate& cert);

Json to_json(const Selection& sel);
Selection selection_from_json(const Json& j);

Json to_json(const CoverReport& report);

Json to_json(const GridMeasureEstimate& est);
Json to_json(const BoundReport& report);

Json to_json(const DigitArray& d);
DigitArray digit_array_from_json(const Json& j);

Json to_json(const BoundCheck& check);

Json to_json(const GrowthReport& report);
std::string growth_report_csv(const GrowthReport& report);

Json to_json(const PipelineTrace& trace);

// Writes to a temp file in the same directory, then renames into place.
void atomic_write_file(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace holder
