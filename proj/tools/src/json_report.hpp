#pragma once

#include <json.hpp>
#include <vector>

#include "unmixed/decide.hpp"
#include "unmixed/graph.hpp"

namespace unmixed::cli {

/// Machine-readable form of a decision report. Field names are part of the
/// output contract: verdict, g, stripped_isolated, certificate, reason.
/// Vertex names from the input file appear everywhere, never internal
/// indices.
nlohmann::json report_to_json(const UnmixedReport& report);

/// JSON for the definition-level oracle: verdict, cover_sizes, cover_count
/// and optionally the full cover list.
nlohmann::json oracle_to_json(const Graph& g, const std::vector<VertexSet>& covers,
                              bool include_covers);

}  // namespace unmixed::cli
