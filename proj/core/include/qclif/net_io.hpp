#pragma once

#include "qclif/net.hpp"

#include <string>

namespace qclif {

// Net file format (JSON):
//   { "field": "Q" | "GF(p)",
//     "net": 6x6 array of [c0, c1, c2] entries,
//            each coefficient an integer or a "num/den" string }
// Symmetry is validated on load. A document whose net lives under an
// "inputs" key (the structured CLI output) is accepted as well, so analyze
// output round-trips as input.

NetOfQuadrics parse_net_document(const std::string& text);
NetOfQuadrics load_net_file(const std::string& path);

// Field parsing shared with the CLI: "Q", "GF(7)".
Field parse_field_name(const std::string& name);

std::string net_to_document(const NetOfQuadrics& net);

} // namespace qclif
