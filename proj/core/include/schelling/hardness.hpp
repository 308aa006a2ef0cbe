#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "schelling/optimality.hpp"
#include "schelling/rat.hpp"
#include "schelling/types.hpp"

namespace schelling {

struct ReductionOutput {
  // Same topology, fully occupied: k red, n - k blue agents.
  Instance instance;
  // n - 2k + 4*C(k,2)/t_deg; some placement reaches SW >= s iff the source
  // graph has a k-clique.
  Rat threshold;
  int source_k = 0;
  int regularity = 0;
};

// Requires graph regular and connected, 2 <= k <= node count.
// Errors: NotRegular, BadParameters, Disconnected.
ReductionOutput clique_to_schelling(const Topology& graph, int k);

// Exact clique number by branch and bound; node count <= 24 (TooLarge).
int brute_force_max_clique(const Topology& graph);

// First placement (enumeration order) with SW >= s, if any.
std::pair<bool, std::optional<Placement>> decide_welfare_threshold(
    const Instance& instance, const Rat& s,
    std::uint64_t cap = kDefaultEnumerationCap);

// n - 2*delta/t_deg on a t_deg-regular, fully occupied topology; equals
// evaluate(...).total exactly. Errors: NotRegular, PreconditionViolated.
Rat welfare_from_cut(const Instance& instance, const Placement& placement);

}  // namespace schelling
