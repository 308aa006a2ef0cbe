#pragma once

#include <string>

#include "schelling/types.hpp"

namespace schelling {

// Instance text format (UTF-8, LF):
//   line 1: "t r b"
//   line 2: "m"
//   then m lines "u v" with 0 <= u < v < t, strictly lexicographically
//   sorted, no duplicates.
// Lines starting with '#' after the edge block are ignored, so files
// produced by the reduce command round-trip. Placement format: one line of
// exactly t characters over {R,B,E}.

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

// Same file format with the color counts ignored; connectivity is not
// required here (callers enforce their own preconditions).
Topology parse_topology(const std::string& text);

Placement parse_placement(const std::string& text, const Instance& instance);
std::string serialize_placement(const Placement& placement);

}  // namespace schelling
