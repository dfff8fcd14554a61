#pragma once

#include "scwave/comparison.hpp"
#include "scwave/report.hpp"

#include <json.hpp>

#include <string>

namespace scwave {

using Json = nlohmann::json;

// Waveform specs and scenarios use the field names of the corresponding
// structs. A spec object may carry "preset": "ieee80211a", which fills the
// 802.11a geometry/timing before the remaining keys are applied as
// overrides. Parsing failures throw ValidationError naming the bad field.

Json spec_to_json(const WaveformSpec& spec);
WaveformSpec spec_from_json(const Json& j);

Json scenario_to_json(const ComparisonScenario& scenario);
ComparisonScenario scenario_from_json(const Json& j);
ComparisonScenario load_scenario_file(const std::string& path); // IoError on read failure

Json report_to_json(const ComparisonReport& report);
ComparisonReport report_from_json(const Json& j);

Json sweep_to_json(const SweepResult& result);

Json table_to_json(const RenderedTable& table);

/// Deterministic serialization used for all JSON emitted by the tools:
/// sorted keys, two-space indent, trailing newline.
std::string to_json_text(const Json& j);

} // namespace scwave
