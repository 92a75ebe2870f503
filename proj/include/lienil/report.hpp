#pragma once

#include <json.hpp>

#include "lienil/characters.hpp"
#include "lienil/fsforms.hpp"
#include "lienil/identities.hpp"
#include "lienil/lcs.hpp"
#include "lienil/presentation.hpp"

namespace lienil::report {

using nlohmann::json;

// Payload converters. Keys are sorted (std::map-backed json), integers are
// exact, rationals and polynomials are strings, and nothing depends on timing.

json weights_json(const WeightTable& table);
json lambda_dim_json(const LambdaDim& dim);
json hilbert_json(int n, int i, const HilbertSeries& series, const WeightTable& lambda, ScalarMode mode);
json pair_json(const PairReport& report);
json scan_json(const ScanReport& scan);
json containment_json(const ContainmentReport& report);
json presentation_json(const PresentationReport& report);
json fs_json(const FsReport& report);
json decomposition_json(const SchurDecomposition& decomposition);
json corollary_json(const CorollaryReport& report);

// Wall-clock data, kept apart from the payloads.
json pair_timing(const PairReport& report);
json scan_timing(const ScanReport& scan);

/// {"command": ..., "result": payload, "timing": timing}
json envelope(const std::string& command, json result, json timing = json::object());

}  // namespace lienil::report
