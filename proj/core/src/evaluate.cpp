#include "schelling/evaluate.hpp"

#include <algorithm>
#include <string>

#include "schelling/errors.hpp"

namespace schelling {

namespace {

// friends / (friends + enemies) over occupied neighbors; 0 with none.
Rat node_utility(const Instance& instance, const Placement& placement, int node) {
  Color mine = placement.labels[node];
  long long friends = 0;
  long long occupied = 0;
  for (int nbr : instance.topology.adjacency[node]) {
    Color theirs = placement.labels[nbr];
    if (theirs == Color::Empty) continue;
    ++occupied;
    if (theirs == mine) ++friends;
  }
  if (occupied == 0) return Rat(0);
  return make_rat(friends, occupied);
}

}  // namespace

Rat utility(const Instance& instance, const Placement& placement, int node) {
  validate_placement(instance, placement);
  if (node < 0 || node >= instance.topology.node_count) {
    throw Error(Errc::BadParameters, "node index out of range");
  }
  if (placement.labels[node] == Color::Empty) {
    throw Error(Errc::NodeEmpty, "node " + std::to_string(node) + " is unoccupied");
  }
  return node_utility(instance, placement, node);
}

std::pair<UtilityProfile, WelfareSummary> evaluate(const Instance& instance,
                                                   const Placement& placement) {
  validate_placement(instance, placement);
  const int t = instance.topology.node_count;

  UtilityProfile profile;
  profile.per_node.assign(t, std::nullopt);
  WelfareSummary summary;
  summary.total = 0;
  summary.red_total = 0;
  summary.blue_total = 0;

  for (int v = 0; v < t; ++v) {
    if (placement.labels[v] == Color::Empty) continue;
    Rat u = node_utility(instance, placement, v);
    profile.per_node[v] = u;
    summary.total += u;
    if (placement.labels[v] == Color::Red) {
      summary.red_total += u;
      profile.sorted_red.push_back(u);
    } else {
      summary.blue_total += u;
      profile.sorted_blue.push_back(u);
    }
    profile.sorted_all.push_back(u);
    if (u > 0) ++summary.positive_count;
  }

  for (int v = 0; v < t; ++v) {
    if (placement.labels[v] == Color::Empty) continue;
    for (int w : instance.topology.adjacency[v]) {
      if (w <= v || placement.labels[w] == Color::Empty) continue;
      if (placement.labels[w] != placement.labels[v]) ++summary.bichromatic_edges;
    }
  }

  std::sort(profile.sorted_all.begin(), profile.sorted_all.end());
  std::sort(profile.sorted_red.begin(), profile.sorted_red.end());
  std::sort(profile.sorted_blue.begin(), profile.sorted_blue.end());
  return {std::move(profile), std::move(summary)};
}

Rat social_welfare(const Instance& instance, const Placement& placement) {
  validate_placement(instance, placement);
  Rat total(0);
  for (int v = 0; v < instance.topology.node_count; ++v) {
    if (placement.labels[v] == Color::Empty) continue;
    total += node_utility(instance, placement, v);
  }
  return total;
}

int count_positive(const Instance& instance, const Placement& placement) {
  validate_placement(instance, placement);
  int positive = 0;
  for (int v = 0; v < instance.topology.node_count; ++v) {
    Color mine = placement.labels[v];
    if (mine == Color::Empty) continue;
    for (int nbr : instance.topology.adjacency[v]) {
      if (placement.labels[nbr] == mine) {
        ++positive;
        break;
      }
    }
  }
  return positive;
}

bool all_agents_positive(const Instance& instance, const Placement& placement) {
  return count_positive(instance, placement) == instance.colors.n();
}

}  // namespace schelling
