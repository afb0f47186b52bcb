#pragma once
#include <string>

#include "burniat/plane.hpp"

namespace burniat {

// JSON schema (see docs/arrangement_format.md): an object with
//   "base_points": three points, each three [num, den] integer pairs,
//   "lines": object with keys "D_1_1" .. "D_3_3", each three [num, den].
// Throws std::invalid_argument with the offending field in the message.
BurniatArrangement parse_arrangement(const std::string &json_text);

BurniatArrangement load_arrangement_file(const std::string &path);

std::string arrangement_to_json(const BurniatArrangement &arr);

} // namespace burniat
