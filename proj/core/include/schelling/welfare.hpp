#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "schelling/rat.hpp"
#include "schelling/types.hpp"

namespace schelling {

// A partially fixed assignment: nodes colored so far, in order, plus how
// many agents of each color remain to be placed uniformly at random on the
// remaining nodes. Only Red/Blue may appear (full-occupancy setting).
struct PrefixCondition {
  std::vector<std::pair<int, Color>> assigned;
  int remaining_red = 0;
  int remaining_blue = 0;
};

// Computes remaining counts from the instance. Throws InfeasiblePrefix on
// duplicate nodes, an Empty color, or a negative remaining count.
PrefixCondition make_prefix(const Instance& instance,
                            const std::vector<std::pair<int, Color>>& assigned);

// n(n-2)/(2(n-1)) for even n, (n-1)/2 for odd n. Requires n >= 2.
Rat g_bound(int n);

// Expected social welfare of a uniform random full-occupancy assignment:
// (n^2 - n + 2b(b-n))/(n-1). Topology-independent. Requires 2 <= n, 0 <= b <= n.
Rat expected_random_welfare(int n, int b);

// Exact E[SW | prefix] over uniform completions. Requires t = n.
Rat conditional_expected_welfare(const Instance& instance,
                                 const PrefixCondition& prefix);

// Greedy conditional-expectation derandomization. Nodes in ascending index
// order; blue on ties; once one color runs out the rest is forced. When
// t > n the agents are confined to the first n nodes reached by
// breadth-first search from node 0 and the other nodes stay empty.
// Returns the placement and its exact social welfare (>= g_bound(n)).
std::pair<Placement, Rat> derandomized_assignment(const Instance& instance);

// Uniform over valid placements: uniform occupied set of size n, then
// uniform red subset. Deterministic in seed.
Placement uniform_random_assignment(const Instance& instance, std::uint64_t seed);

}  // namespace schelling
