#pragma once

// JSON views of results. Every top-level document carries "schema_version".

#include "hexspan/coloring.hpp"
#include "hexspan/reuse.hpp"
#include "hexspan/shell.hpp"
#include "hexspan/span.hpp"

#include <json.hpp>

namespace hexspan {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(Vertex v);
nlohmann::json to_json(const SpanCertificate& cert);
nlohmann::json to_json(const ObservationReport& report);
nlohmann::json to_json(const SpreadBound& spread);
nlohmann::json to_json(const CornerExclusion& exclusion);
nlohmann::json to_json(const ColorCountCertificate& cert);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const LatticeColoring& coloring);
nlohmann::json to_json(const Ring& ring);

} // namespace hexspan
