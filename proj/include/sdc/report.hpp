#pragma once

#include <json.hpp>

#include "sdc/harness.hpp"

namespace sdc {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json provenance_json(const Provenance& p);

// Serialized code: ring, generator rows as token strings, provenance.
nlohmann::json code_json(const RingCode& c);
RingCode code_from_json(const nlohmann::json& j);

nlohmann::json census_json(const WeightCensus& wc);
nlohmann::json enumerator_json(const EnumeratorReport& er);
nlohmann::json analysis_json(const ImageAnalysis& a);
nlohmann::json search_report_json(const SearchReport& r);
nlohmann::json table_report_json(const TableReport& r);

// Top-level envelope: {schema_version, command, inputs, results, anomalies,
// timing}.
nlohmann::json report_envelope(const std::string& command, nlohmann::json inputs,
                               nlohmann::json results, nlohmann::json anomalies,
                               double seconds);

}  // namespace sdc
