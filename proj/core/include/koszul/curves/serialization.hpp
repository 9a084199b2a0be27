#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "koszul/curves/line_bundle.hpp"

namespace koszul::curves {

/// Model document: {components, nodes: [{a: [ci, [as, bs]], b: [cj, [as, bs]],
/// gluing: "p/q"}], degrees, seed}. Rationals are "p/q" strings.
nlohmann::json model_to_json(const LineBundle& bundle);
LineBundle model_from_json(const nlohmann::json& doc);

/// Compact text form; serialize(parse(s)) == s for every text this produced.
std::string serialize_model(const LineBundle& bundle);
LineBundle parse_model(const std::string& text);

/// FNV-1a of serialize_model.
std::uint64_t model_hash(const LineBundle& bundle);
std::string hash_hex(std::uint64_t hash);
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace koszul::curves
