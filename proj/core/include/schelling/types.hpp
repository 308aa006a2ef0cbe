#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "schelling/rat.hpp"

namespace schelling {

// Location graph. Simple, undirected; adjacency lists sorted ascending so
// every traversal order in the library is deterministic. Connectivity is
// enforced by validate_instance, not by construction.
struct Topology {
  int node_count = 0;
  std::vector<std::vector<int>> adjacency;

  int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
  bool has_edge(int u, int v) const;
  long long edge_count() const;
  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;
  bool is_connected() const;
  // Connected with exactly node_count - 1 edges.
  bool is_tree() const;
  // All degrees equal; returns that degree, or -1 if irregular.
  int regular_degree() const;
};

// Builds sorted adjacency from an edge list. Rejects self-loops and
// duplicate edges (NotSimple) and out-of-range endpoints (BadParameters).
Topology make_topology(int node_count, const std::vector<std::pair<int, int>>& edge_list);

struct ColorCounts {
  int red = 0;
  int blue = 0;

  int n() const { return red + blue; }
};

struct Instance {
  Topology topology;
  ColorCounts colors;
};

// Checks simplicity, connectivity, and r + b <= t; r, b >= 0 and
// r + b >= 2. Errors: NotSimple, Disconnected, TooManyAgents, BadParameters.
Instance validate_instance(const Topology& topology, const ColorCounts& colors);

enum class Color : std::uint8_t { Red, Blue, Empty };

struct Placement {
  std::vector<Color> labels;

  int count(Color c) const;
  int size() const { return static_cast<int>(labels.size()); }
};

// Label counts must match the instance exactly. Throws InvalidPlacement.
void validate_placement(const Instance& instance, const Placement& placement);

}  // namespace schelling
