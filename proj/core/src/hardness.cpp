#include "schelling/hardness.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "schelling/errors.hpp"
#include "schelling/evaluate.hpp"

namespace schelling {

ReductionOutput clique_to_schelling(const Topology& graph, int k) {
  int degree = graph.regular_degree();
  if (degree < 0) {
    throw Error(Errc::NotRegular, "node degrees differ");
  }
  if (!graph.is_connected()) {
    throw Error(Errc::Disconnected, "graph is not connected");
  }
  const int n = graph.node_count;
  if (k < 2 || k > n) {
    throw Error(Errc::BadParameters,
                "k = " + std::to_string(k) + " outside [2, " + std::to_string(n) + "]");
  }
  ReductionOutput out;
  out.instance = validate_instance(graph, ColorCounts{k, n - k});
  // A red k-clique leaves delta = k*degree - k(k-1) bichromatic edges, the
  // fewest any red set of size k can, hence the welfare target below.
  out.threshold = Rat(n - 2 * k) + make_rat(BigInt(2) * k * (k - 1), degree);
  out.source_k = k;
  out.regularity = degree;
  return out;
}

namespace {

void expand(const std::vector<std::uint32_t>& adj, std::uint32_t candidates, int size,
            int& best) {
  while (candidates != 0) {
    if (size + __builtin_popcount(candidates) <= best) return;
    int v = __builtin_ctz(candidates);
    candidates &= candidates - 1;
    if (size + 1 > best) best = size + 1;
    expand(adj, candidates & adj[v], size + 1, best);
  }
}

}  // namespace

int brute_force_max_clique(const Topology& graph) {
  const int n = graph.node_count;
  if (n > 24) {
    throw Error(Errc::TooLarge,
                "clique search limited to 24 nodes, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : graph.adjacency[v]) adj[v] |= std::uint32_t(1) << w;
  }
  int best = 0;
  expand(adj, (std::uint32_t(1) << n) - 1, 0, best);
  return best;
}

std::pair<bool, std::optional<Placement>> decide_welfare_threshold(const Instance& instance,
                                                                   const Rat& s,
                                                                   std::uint64_t cap) {
  std::optional<Placement> witness;
  for_each_placement_while(
      instance,
      [&](const Placement& placement) {
        if (social_welfare(instance, placement) >= s) {
          witness = placement;
          return false;
        }
        return true;
      },
      cap);
  return {witness.has_value(), std::move(witness)};
}

Rat welfare_from_cut(const Instance& instance, const Placement& placement) {
  int degree = instance.topology.regular_degree();
  if (degree < 0) {
    throw Error(Errc::NotRegular, "node degrees differ");
  }
  if (instance.colors.n() != instance.topology.node_count) {
    throw Error(Errc::PreconditionViolated, "t != n");
  }
  validate_placement(instance, placement);
  BigInt bichromatic = 0;
  for (int v = 0; v < instance.topology.node_count; ++v) {
    for (int w : instance.topology.adjacency[v]) {
      if (w > v && placement.labels[v] != placement.labels[w]) ++bichromatic;
    }
  }
  return Rat(instance.topology.node_count) - make_rat(2 * bichromatic, degree);
}

}  // namespace schelling
