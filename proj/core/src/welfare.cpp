#include "schelling/welfare.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "schelling/errors.hpp"
#include "schelling/evaluate.hpp"
#include "schelling/rng.hpp"

namespace schelling {

PrefixCondition make_prefix(const Instance& instance,
                            const std::vector<std::pair<int, Color>>& assigned) {
  const int t = instance.topology.node_count;
  std::vector<char> used(t, 0);
  int red = 0;
  int blue = 0;
  for (auto [node, color] : assigned) {
    if (node < 0 || node >= t) {
      throw Error(Errc::InfeasiblePrefix, "node index out of range");
    }
    if (used[node]) {
      throw Error(Errc::InfeasiblePrefix, "node " + std::to_string(node) + " assigned twice");
    }
    used[node] = 1;
    if (color == Color::Red) {
      ++red;
    } else if (color == Color::Blue) {
      ++blue;
    } else {
      throw Error(Errc::InfeasiblePrefix, "prefix colors must be Red or Blue");
    }
  }
  PrefixCondition prefix;
  prefix.assigned = assigned;
  prefix.remaining_red = instance.colors.red - red;
  prefix.remaining_blue = instance.colors.blue - blue;
  if (prefix.remaining_red < 0 || prefix.remaining_blue < 0) {
    throw Error(Errc::InfeasiblePrefix, "prefix uses more agents than available");
  }
  return prefix;
}

Rat g_bound(int n) {
  if (n < 2) throw Error(Errc::BadParameters, "g(n) needs n >= 2");
  if (n % 2 == 0) return make_rat(static_cast<long long>(n) * (n - 2), 2LL * (n - 1));
  return make_rat(n - 1, 2);
}

Rat expected_random_welfare(int n, int b) {
  if (n < 2) throw Error(Errc::BadParameters, "expected welfare needs n >= 2");
  if (b < 0 || b > n) throw Error(Errc::BadParameters, "need 0 <= b <= n");
  long long nn = n;
  long long bb = b;
  return make_rat(nn * nn - nn + 2 * bb * (bb - nn), nn - 1);
}

Rat conditional_expected_welfare(const Instance& instance, const PrefixCondition& prefix) {
  const int t = instance.topology.node_count;
  const int n = instance.colors.n();
  if (t != n) {
    throw Error(Errc::BadParameters, "conditional expectation requires t = n");
  }
  // Re-derive the remaining counts so hand-built prefixes are checked too.
  PrefixCondition checked = make_prefix(instance, prefix.assigned);
  if (checked.remaining_red != prefix.remaining_red ||
      checked.remaining_blue != prefix.remaining_blue) {
    throw Error(Errc::InfeasiblePrefix, "remaining counts disagree with assigned list");
  }

  std::vector<std::optional<Color>> fixed(t, std::nullopt);
  for (auto [node, color] : prefix.assigned) fixed[node] = color;
  const int unassigned = n - static_cast<int>(prefix.assigned.size());
  const int rem[2] = {prefix.remaining_red, prefix.remaining_blue};

  // Every node is occupied (t = n), so node i's utility is
  // (#same-color neighbors)/deg(i). Linearity over nodes and neighbors:
  //   E[u_i] = sum_c Pr(c_i = c) * (1/deg) * sum_{j ~ i} Pr(c_j = c | c_i = c)
  // with hypergeometric probabilities over the uniform completion.
  Rat total(0);
  for (int i = 0; i < t; ++i) {
    const auto& nbrs = instance.topology.adjacency[i];
    const long long deg = static_cast<long long>(nbrs.size());
    for (int ci = 0; ci < 2; ++ci) {
      Color c = ci == 0 ? Color::Red : Color::Blue;
      Rat p_i;
      if (fixed[i].has_value()) {
        if (*fixed[i] != c) continue;
        p_i = 1;
      } else {
        if (rem[ci] == 0) continue;
        p_i = make_rat(rem[ci], unassigned);
      }
      long long same_fixed = 0;
      long long open_nbrs = 0;
      for (int j : nbrs) {
        if (fixed[j].has_value()) {
          if (*fixed[j] == c) ++same_fixed;
        } else {
          ++open_nbrs;
        }
      }
      Rat expected_same(same_fixed);
      if (open_nbrs > 0) {
        if (fixed[i].has_value()) {
          expected_same += make_rat(open_nbrs * rem[ci], unassigned);
        } else {
          // Conditioning on node i consuming one agent of color c.
          expected_same += make_rat(open_nbrs * (rem[ci] - 1), unassigned - 1);
        }
      }
      total += p_i * expected_same / deg;
    }
  }
  return total;
}

namespace {

// First n nodes dequeued by breadth-first search from node 0.
std::vector<int> bfs_prefix(const Topology& topo, int n) {
  std::vector<char> seen(topo.node_count, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::vector<int> order;
  while (!frontier.empty() && static_cast<int>(order.size()) < n) {
    int u = frontier.front();
    frontier.pop();
    order.push_back(u);
    for (int v : topo.adjacency[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        frontier.push(v);
      }
    }
  }
  return order;
}

Placement derandomize_full(const Instance& instance) {
  const int n = instance.topology.node_count;
  const int blue_total = instance.colors.blue;
  const int red_total = instance.colors.red;

  std::vector<std::pair<int, Color>> assigned;
  assigned.reserve(n);
  Placement placement;
  placement.labels.assign(n, Color::Empty);
  int red_left = red_total;
  int blue_left = blue_total;

  for (int i = 0; i < n; ++i) {
    if (red_left == 0 || blue_left == 0) {
      // The completion is forced; no randomness remains to condition on.
      Color fill = red_left == 0 ? Color::Blue : Color::Red;
      for (int j = i; j < n; ++j) placement.labels[j] = fill;
      return placement;
    }
    auto with = [&](Color c) {
      auto trial = assigned;
      trial.emplace_back(i, c);
      return conditional_expected_welfare(instance, make_prefix(instance, trial));
    };
    Rat w_blue = with(Color::Blue);
    Rat w_red = with(Color::Red);
    Color choice = w_blue >= w_red ? Color::Blue : Color::Red;
    assigned.emplace_back(i, choice);
    placement.labels[i] = choice;
    if (choice == Color::Blue) {
      --blue_left;
    } else {
      --red_left;
    }
  }
  return placement;
}

}  // namespace

std::pair<Placement, Rat> derandomized_assignment(const Instance& instance) {
  const int t = instance.topology.node_count;
  const int n = instance.colors.n();
  Placement placement;
  if (t == n) {
    placement = derandomize_full(instance);
  } else {
    std::vector<int> keep = bfs_prefix(instance.topology, n);
    std::sort(keep.begin(), keep.end());
    std::vector<int> to_sub(t, -1);
    for (int i = 0; i < n; ++i) to_sub[keep[i]] = i;
    std::vector<std::pair<int, int>> sub_edges;
    for (int u : keep) {
      for (int v : instance.topology.adjacency[u]) {
        if (u < v && to_sub[v] >= 0) sub_edges.emplace_back(to_sub[u], to_sub[v]);
      }
    }
    Instance sub = validate_instance(make_topology(n, sub_edges), instance.colors);
    Placement sub_placement = derandomize_full(sub);
    placement.labels.assign(t, Color::Empty);
    for (int i = 0; i < n; ++i) placement.labels[keep[i]] = sub_placement.labels[i];
  }
  Rat welfare = social_welfare(instance, placement);
  return {std::move(placement), std::move(welfare)};
}

Placement uniform_random_assignment(const Instance& instance, std::uint64_t seed) {
  const int t = instance.topology.node_count;
  std::vector<int> perm(t);
  for (int i = 0; i < t; ++i) perm[i] = i;
  SplitMix64 rng(seed);
  rng.shuffle(perm);
  Placement placement;
  placement.labels.assign(t, Color::Empty);
  for (int i = 0; i < instance.colors.red; ++i) placement.labels[perm[i]] = Color::Red;
  for (int i = instance.colors.red; i < instance.colors.n(); ++i) {
    placement.labels[perm[i]] = Color::Blue;
  }
  return placement;
}

}  // namespace schelling
