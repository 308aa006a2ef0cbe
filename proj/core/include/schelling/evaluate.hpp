#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schelling/rat.hpp"
#include "schelling/types.hpp"

namespace schelling {

struct UtilityProfile {
  // One entry per node; nullopt for empty nodes.
  std::vector<std::optional<Rat>> per_node;
  // Non-decreasing. sorted_all is the multiset union of the other two.
  std::vector<Rat> sorted_all;
  std::vector<Rat> sorted_red;
  std::vector<Rat> sorted_blue;
};

struct WelfareSummary {
  Rat total;
  Rat red_total;
  Rat blue_total;
  // Agents with strictly positive utility.
  int positive_count = 0;
  // Edges joining a red agent and a blue agent (delta).
  long long bichromatic_edges = 0;
};

// Fraction of same-color agents among the node's occupied neighbors;
// 0 when no neighbor is occupied. Throws NodeEmpty on an empty node.
Rat utility(const Instance& instance, const Placement& placement, int node);

std::pair<UtilityProfile, WelfareSummary> evaluate(const Instance& instance,
                                                   const Placement& placement);

// Shortcuts that skip building the full profile.
Rat social_welfare(const Instance& instance, const Placement& placement);
int count_positive(const Instance& instance, const Placement& placement);
bool all_agents_positive(const Instance& instance, const Placement& placement);

}  // namespace schelling
