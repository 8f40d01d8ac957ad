#pragma once

// Canonical JSON documents for instances, matchings and capacity vectors.
// Key order is preserved, so serialize(parse(doc)) == doc for canonical input.

#include <string>
#include <string_view>

#include "capmatch/core.hpp"
#include "json.hpp"

namespace capmatch::io {

using Json = nlohmann::ordered_json;

Instance parse_instance(std::string_view text);
Instance instance_from_json(const Json& doc);
Json instance_to_json(const Instance& inst);
/// Two-space indented document with a trailing newline.
std::string serialize_instance(const Instance& inst);

Matching matching_from_json(const Instance& inst, const Json& doc);
Json matching_to_json(const Instance& inst, const Matching& mu);

/// Omitted schools default to zero.
CapacityVector capacity_from_json(const Instance& inst, const Json& doc);
Json capacity_to_json(const Instance& inst, const CapacityVector& r);

/// Parse text as JSON; malformed input raises InvalidInput.
Json parse_json(std::string_view text);
std::string dump(const Json& doc);

}  // namespace capmatch::io
