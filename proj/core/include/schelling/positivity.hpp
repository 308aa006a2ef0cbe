#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "schelling/types.hpp"

namespace schelling {

// Decides whether some placement gives every agent a positive utility when
// the topology is a tree; returns a witness when one exists. Dynamic
// program over subtrees rooted at node 0, children in ascending order.
// When table_sizes is given it receives the per-node count of reachable
// table entries, each bounded by 6(t+1)^3. Throws NotATree.
std::pair<bool, std::optional<Placement>> tree_all_positive(
    const Instance& instance, std::vector<std::size_t>* table_sizes = nullptr);

// At least ceil(n/2) agents positive: the majority color (red on ties)
// fills a depth-first prefix from node 0, which is connected; the minority
// takes the remaining nodes in ascending index order. Requires n >= 3.
Placement half_positive(const Instance& instance);

inline constexpr int kDefaultSwapCap = 20;

// Makes every agent positive by repeated swaps: take the lowest-index
// zero-utility agent, walk the longest simple path from it to another
// agent of its color (exhaustive search, hence the size cap), and swap it
// with the last opposite-color agent on that path. Each swap strictly
// increases the positive count. Requires min degree >= 2, t = n, and
// r, b >= 2 (PreconditionViolated); n <= cap (TooLarge).
Placement all_positive_swap(const Instance& instance, int cap = kDefaultSwapCap);

// Same guarantee in polynomial time, by induction on the edge count:
// non-bridge edges between degree->=3 nodes are deleted; a bridge between
// them splits the instance in two with agent counts chosen per a case
// table; the sparse base case colors the cycles and paths hanging off one
// low-degree hub of the meta-graph over primary nodes, then recurses.
// Requires min degree >= 2, t = n, r, b >= 2 (PreconditionViolated).
Placement all_positive_constructive(const Instance& instance);

}  // namespace schelling
