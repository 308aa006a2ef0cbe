#include "schelling/positivity.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "schelling/errors.hpp"
#include "schelling/evaluate.hpp"

namespace schelling {

// ---------------------------------------------------------------------------
// Tree decision procedure.
//
// Root the tree at node 0. For node v, tau_v(C, n_B, n_R, n_E, q) records
// whether the subtree under v admits a partial assignment where v holds C,
// the subtree contains the given counts, every occupied node below v has a
// same-color neighbor inside the subtree, and q says whether v has a
// same-color child. Children are folded in one at a time through theta
// tables whose flags track which child colors appeared (q_B, q_R) and
// whether some child of that color still needs v to match it (q_B', q_R').

namespace {

constexpr int kColorRed = 0;
constexpr int kColorBlue = 1;
constexpr int kColorEmpty = 2;

using Key = std::uint64_t;

Key tau_key(int c, int nb, int nr, int ne, bool q) {
  return (Key(c) << 25) | (Key(nb) << 17) | (Key(nr) << 9) | (Key(ne) << 1) |
         Key(q ? 1 : 0);
}

struct TauParts {
  int c, nb, nr, ne;
  bool q;
};

TauParts tau_parts(Key k) {
  return TauParts{static_cast<int>(k >> 25), static_cast<int>((k >> 17) & 0xff),
                  static_cast<int>((k >> 9) & 0xff), static_cast<int>((k >> 1) & 0xff),
                  (k & 1) != 0};
}

Key theta_key(int nb, int nr, int ne, bool qb, bool qr, bool qbp, bool qrp) {
  return (Key(nb) << 20) | (Key(nr) << 12) | (Key(ne) << 4) | (Key(qb) << 3) |
         (Key(qr) << 2) | (Key(qbp) << 1) | Key(qrp);
}

struct ThetaParts {
  int nb, nr, ne;
  bool qb, qr, qbp, qrp;
};

ThetaParts theta_parts(Key k) {
  return ThetaParts{static_cast<int>((k >> 20) & 0xff), static_cast<int>((k >> 12) & 0xff),
                    static_cast<int>((k >> 4) & 0xff), ((k >> 3) & 1) != 0,
                    ((k >> 2) & 1) != 0, ((k >> 1) & 1) != 0, (k & 1) != 0};
}

struct ThetaBack {
  Key prev = 0;   // entry in the previous theta step
  Key child = 0;  // tau entry of the child folded at this step
};

}  // namespace

std::pair<bool, std::optional<Placement>> tree_all_positive(
    const Instance& instance, std::vector<std::size_t>* table_sizes) {
  const Topology& topo = instance.topology;
  const int t = topo.node_count;
  if (!topo.is_tree()) {
    throw Error(Errc::NotATree, "topology has " + std::to_string(topo.edge_count()) +
                                    " edges on " + std::to_string(t) + " nodes");
  }
  if (t > 255) {
    throw Error(Errc::TooLarge, "tree too large for packed table keys");
  }
  const int blue_budget = instance.colors.blue;
  const int red_budget = instance.colors.red;
  const int empty_budget = t - instance.colors.n();

  // Rooted orientation, children ascending; breadth-first order puts every
  // parent before its children, so the reverse is a valid evaluation order.
  std::vector<int> parent(t, -1);
  std::vector<std::vector<int>> children(t);
  std::vector<int> bfs_order;
  bfs_order.reserve(t);
  {
    std::vector<char> seen(t, 0);
    seen[0] = 1;
    bfs_order.push_back(0);
    for (std::size_t head = 0; head < bfs_order.size(); ++head) {
      int u = bfs_order[head];
      for (int w : topo.adjacency[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = u;
          children[u].push_back(w);
          bfs_order.push_back(w);
        }
      }
    }
  }

  std::vector<std::unordered_map<Key, Key>> tau(t);
  std::vector<std::vector<std::unordered_map<Key, ThetaBack>>> theta(t);

  for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it) {
    int v = *it;
    const auto& kids = children[v];
    const int fold_steps = static_cast<int>(kids.size());
    auto& steps = theta[v];
    steps.assign(fold_steps + 1, {});
    steps[0].emplace(theta_key(0, 0, 0, false, false, false, false), ThetaBack{});

    for (int i = 1; i <= fold_steps; ++i) {
      int c = kids[i - 1];
      for (const auto& [pk, unused] : steps[i - 1]) {
        ThetaParts p = theta_parts(pk);
        for (const auto& [ck, unused2] : tau[c]) {
          TauParts cp = tau_parts(ck);
          int nb = p.nb + cp.nb;
          int nr = p.nr + cp.nr;
          int ne = p.ne + cp.ne;
          if (nb > blue_budget || nr > red_budget || ne > empty_budget) continue;
          bool qb = p.qb || cp.c == kColorBlue;
          bool qr = p.qr || cp.c == kColorRed;
          bool qbp = p.qbp || (cp.c == kColorBlue && !cp.q);
          bool qrp = p.qrp || (cp.c == kColorRed && !cp.q);
          Key nk = theta_key(nb, nr, ne, qb, qr, qbp, qrp);
          steps[i].try_emplace(nk, ThetaBack{pk, ck});
        }
      }
    }

    for (const auto& [fk, unused] : steps[fold_steps]) {
      ThetaParts p = theta_parts(fk);
      // A needy child of the opposite color can never be satisfied once
      // v's color is fixed; a needy child of v's color is satisfied by v.
      if (!p.qrp && p.nb + 1 <= blue_budget) {
        tau[v].try_emplace(tau_key(kColorBlue, p.nb + 1, p.nr, p.ne, p.qb), fk);
      }
      if (!p.qbp && p.nr + 1 <= red_budget) {
        tau[v].try_emplace(tau_key(kColorRed, p.nb, p.nr + 1, p.ne, p.qr), fk);
      }
      if (!p.qbp && !p.qrp && p.ne + 1 <= empty_budget) {
        tau[v].try_emplace(tau_key(kColorEmpty, p.nb, p.nr, p.ne + 1, false), fk);
      }
    }
  }

  if (table_sizes) {
    table_sizes->assign(t, 0);
    for (int v = 0; v < t; ++v) (*table_sizes)[v] = tau[v].size();
  }

  // An occupied root has no parent, so it must find its match among its
  // children (q = true); an empty root carries no constraint.
  const Key root_options[3] = {
      tau_key(kColorRed, blue_budget, red_budget, empty_budget, true),
      tau_key(kColorBlue, blue_budget, red_budget, empty_budget, true),
      tau_key(kColorEmpty, blue_budget, red_budget, empty_budget, false)};
  Key accepted = 0;
  bool found = false;
  for (Key option : root_options) {
    if (tau[0].count(option)) {
      accepted = option;
      found = true;
      break;
    }
  }
  if (!found) return {false, std::nullopt};

  Placement witness;
  witness.labels.assign(t, Color::Empty);
  std::function<void(int, Key)> rebuild = [&](int v, Key key) {
    TauParts p = tau_parts(key);
    witness.labels[v] = p.c == kColorRed   ? Color::Red
                        : p.c == kColorBlue ? Color::Blue
                                            : Color::Empty;
    Key step_key = tau[v].at(key);
    for (int i = static_cast<int>(children[v].size()); i >= 1; --i) {
      const ThetaBack& back = theta[v][i].at(step_key);
      rebuild(children[v][i - 1], back.child);
      step_key = back.prev;
    }
  };
  rebuild(0, accepted);
  return {true, std::move(witness)};
}

// ---------------------------------------------------------------------------

Placement half_positive(const Instance& instance) {
  const int n = instance.colors.n();
  if (n < 3) {
    throw Error(Errc::BadParameters, "half_positive needs n >= 3");
  }
  const int t = instance.topology.node_count;
  const bool red_major = instance.colors.red >= instance.colors.blue;
  const Color major = red_major ? Color::Red : Color::Blue;
  const Color minor = red_major ? Color::Blue : Color::Red;
  const int major_count = std::max(instance.colors.red, instance.colors.blue);
  const int minor_count = std::min(instance.colors.red, instance.colors.blue);

  // Depth-first preorder from node 0, neighbors ascending. Any prefix of it
  // induces a connected subgraph, so the majority block supports itself.
  std::vector<int> preorder;
  preorder.reserve(t);
  std::vector<char> seen(t, 0);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (seen[u]) continue;
    seen[u] = 1;
    preorder.push_back(u);
    const auto& nbrs = instance.topology.adjacency[u];
    for (auto rit = nbrs.rbegin(); rit != nbrs.rend(); ++rit) {
      if (!seen[*rit]) stack.push_back(*rit);
    }
  }

  Placement placement;
  placement.labels.assign(t, Color::Empty);
  std::vector<char> taken(t, 0);
  for (int i = 0; i < major_count; ++i) {
    placement.labels[preorder[i]] = major;
    taken[preorder[i]] = 1;
  }
  int placed = 0;
  for (int v = 0; v < t && placed < minor_count; ++v) {
    if (!taken[v]) {
      placement.labels[v] = minor;
      ++placed;
    }
  }
  return placement;
}

// ---------------------------------------------------------------------------

namespace {

void check_full_min_degree2(const Instance& instance) {
  const Topology& topo = instance.topology;
  if (instance.colors.n() != topo.node_count) {
    throw Error(Errc::PreconditionViolated, "t != n");
  }
  for (int v = 0; v < topo.node_count; ++v) {
    if (topo.degree(v) < 2) {
      throw Error(Errc::PreconditionViolated,
                  "node " + std::to_string(v) + " has degree < 2");
    }
  }
  if (instance.colors.red < 2 || instance.colors.blue < 2) {
    throw Error(Errc::PreconditionViolated, "needs at least two agents of each type");
  }
}

// A candidate exchange for a zero-utility agent: the occupant of `partner`
// trades places with the stuck agent. Candidates come from simple paths that
// run from the stuck node to another node of the same color.
struct SwapChoice {
  int partner = -1;
  std::size_t path_nodes = 0;  // node count of the path that produced the swap
  int retreat = 0;             // 0 = the last opposite-colored node on that path
  int positives_after = 0;
};

// Pick the exchange that repairs a zero-utility agent. Every simple path from
// `start` to another node of the same color is walked by exhaustive
// backtracking; longer paths are preferred, and within a path the
// opposite-colored node nearest the far end. That first preference almost
// always works, but moving an agent can strand a neighbor whose only
// same-color support it was, so each candidate is verified and the best
// exchange that strictly raises the positive count — longest path, then
// smallest retreat from the far end, then first found — is returned.
SwapChoice find_improving_swap(const Instance& instance, const Placement& placement,
                               int start, int positives_now) {
  const Topology& topo = instance.topology;
  const Color mine = placement.labels[start];
  SwapChoice best;
  Placement trial = placement;
  std::vector<int> path{start};
  std::vector<char> on_path(topo.node_count, 0);
  on_path[start] = 1;

  auto consider = [&]() {
    // Re-count candidates only on paths that could beat the incumbent under
    // the (longer path, then smaller retreat) order.
    if (path.size() < best.path_nodes) return;
    const bool tie = best.partner >= 0 && path.size() == best.path_nodes;
    if (tie && best.retreat == 0) return;
    int retreat = 0;
    for (auto rit = path.rbegin(); rit != path.rend(); ++rit) {
      if (placement.labels[*rit] == mine) continue;
      if (tie && retreat >= best.retreat) break;
      std::swap(trial.labels[start], trial.labels[*rit]);
      const int after = count_positive(instance, trial);
      std::swap(trial.labels[start], trial.labels[*rit]);
      if (after > positives_now) {
        best = SwapChoice{*rit, path.size(), retreat, after};
        break;
      }
      ++retreat;
    }
  };

  std::function<void(int)> extend = [&](int u) {
    for (int w : topo.adjacency[u]) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      if (placement.labels[w] == mine) consider();
      extend(w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  extend(start);
  return best;
}

}  // namespace

Placement all_positive_swap(const Instance& instance, int cap) {
  check_full_min_degree2(instance);
  const int n = instance.colors.n();
  if (n > cap) {
    throw Error(Errc::TooLarge, "n = " + std::to_string(n) + " exceeds path-search cap " +
                                    std::to_string(cap));
  }
  Placement placement = half_positive(instance);
  int positives = count_positive(instance, placement);
  for (int round = 0; round <= n && positives < n; ++round) {
    int zero_node = -1;
    for (int v = 0; v < n; ++v) {
      Color mine = placement.labels[v];
      bool supported = false;
      for (int w : instance.topology.adjacency[v]) {
        if (placement.labels[w] == mine) {
          supported = true;
          break;
        }
      }
      if (!supported) {
        zero_node = v;
        break;
      }
    }
    if (zero_node < 0) break;
    const SwapChoice choice = find_improving_swap(instance, placement, zero_node, positives);
    if (choice.partner < 0) {
      throw std::logic_error("no positivity-improving exchange from the current assignment");
    }
    std::swap(placement.labels[zero_node], placement.labels[choice.partner]);
    positives = choice.positives_after;
  }
  if (positives != n) {
    throw std::logic_error("swap procedure terminated before full positivity");
  }
  return placement;
}

// ---------------------------------------------------------------------------
// Inductive construction. The working graph is a map from global node ids
// to sorted neighbor lists; labels are written into a shared array, and the
// final assignment is checked against the original topology, where every
// deleted edge is still present.

namespace {

using AdjMap = std::map<int, std::vector<int>>;

void erase_value(std::vector<int>& values, int value) {
  values.erase(std::find(values.begin(), values.end(), value));
}

AdjMap induced(const AdjMap& adj, const std::unordered_set<int>& keep) {
  AdjMap sub;
  for (const auto& [u, nbrs] : adj) {
    if (!keep.count(u)) continue;
    std::vector<int> filtered;
    for (int w : nbrs) {
      if (keep.count(w)) filtered.push_back(w);
    }
    sub.emplace(u, std::move(filtered));
  }
  return sub;
}

std::vector<int> component_of(const AdjMap& adj, int start) {
  std::vector<int> comp{start};
  std::unordered_set<int> seen{start};
  for (std::size_t head = 0; head < comp.size(); ++head) {
    for (int w : adj.at(comp[head])) {
      if (seen.insert(w).second) comp.push_back(w);
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

bool connected(const AdjMap& adj) {
  if (adj.empty()) return false;
  return component_of(adj, adj.begin()->first).size() == adj.size();
}

// Bridges by the classic low-link pass.
std::set<std::pair<int, int>> bridge_set(const AdjMap& adj) {
  std::set<std::pair<int, int>> bridges;
  std::unordered_map<int, int> disc;
  std::unordered_map<int, int> low;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int from) {
    disc[u] = low[u] = timer++;
    for (int w : adj.at(u)) {
      if (w == from) {
        from = -2;  // skip the parent edge once; parallel edges cannot occur
        continue;
      }
      if (disc.count(w)) {
        low[u] = std::min(low[u], disc[w]);
      } else {
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] > disc[u]) bridges.emplace(std::min(u, w), std::max(u, w));
      }
    }
  };
  for (const auto& [u, unused] : adj) {
    if (!disc.count(u)) dfs(u, -1);
  }
  return bridges;
}

struct Chain {
  int p = -1;                // primary endpoint (walk start)
  int q = -1;                // primary endpoint (walk end); q == p for cycles
  std::vector<int> secs;     // interior degree-2 nodes, in walk order from p
  bool is_cycle = false;
};

void solve(const AdjMap& graph, const std::set<int>& persistent, int red_count,
           int blue_count, std::vector<Color>& labels);

void color_all(const AdjMap& graph, Color color, std::vector<Color>& labels) {
  for (const auto& [u, unused] : graph) labels[u] = color;
}

// Single cycle: contiguous blue arc then contiguous red arc.
void color_cycle(const AdjMap& graph, int red_count, int blue_count,
                 std::vector<Color>& labels) {
  int start = graph.begin()->first;
  std::vector<int> order{start};
  int prev = start;
  int cur = graph.at(start)[0];
  while (cur != start) {
    order.push_back(cur);
    const auto& nbrs = graph.at(cur);
    int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    labels[order[i]] = static_cast<int>(i) < blue_count ? Color::Blue : Color::Red;
  }
  (void)red_count;
}

void base_case(const AdjMap& graph, const std::set<int>& persistent, int red_count,
               int blue_count, std::vector<Color>& labels) {
  bool two_regular = true;
  for (const auto& [u, nbrs] : graph) {
    if (nbrs.size() != 2) {
      two_regular = false;
      break;
    }
  }
  if (two_regular) {
    color_cycle(graph, red_count, blue_count, labels);
    return;
  }

  std::set<int> primaries = persistent;
  for (const auto& [u, nbrs] : graph) {
    if (nbrs.size() >= 3) primaries.insert(u);
  }

  // Walk the degree-2 chains hanging between primaries. Each path is
  // recorded from its smaller endpoint, each cycle from its smaller
  // starting secondary, so every chain appears exactly once.
  std::vector<Chain> chains;
  for (int p : primaries) {
    for (int s : graph.at(p)) {
      if (primaries.count(s)) {
        if (p < s) chains.push_back(Chain{p, s, {}, false});
        continue;
      }
      Chain chain;
      chain.p = p;
      int prev = p;
      int cur = s;
      while (!primaries.count(cur)) {
        chain.secs.push_back(cur);
        const auto& nbrs = graph.at(cur);
        int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
      }
      chain.q = cur;
      if (chain.q == chain.p) {
        chain.is_cycle = true;
        if (chain.secs.front() < chain.secs.back()) chains.push_back(std::move(chain));
      } else if (chain.p < chain.q) {
        chains.push_back(std::move(chain));
      }
    }
  }

  // Meta-graph over primaries; pick v as the smallest leaf of a
  // breadth-first spanning tree, so removing v keeps the rest connected.
  std::map<int, std::set<int>> meta;
  for (int p : primaries) meta[p];
  for (const Chain& chain : chains) {
    if (!chain.is_cycle) {
      meta[chain.p].insert(chain.q);
      meta[chain.q].insert(chain.p);
    }
  }
  int v = -1;
  {
    int root = *primaries.begin();
    std::map<int, int> tree_children;
    std::set<int> seen{root};
    std::vector<int> frontier{root};
    tree_children[root] = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      int u = frontier[head];
      for (int w : meta[u]) {
        if (seen.insert(w).second) {
          ++tree_children[u];
          tree_children[w] = 0;
          frontier.push_back(w);
        }
      }
    }
    if (seen.size() != primaries.size()) {
      throw std::logic_error("meta-graph is disconnected");
    }
    for (int p : primaries) {
      bool is_leaf = tree_children[p] == 0 && (p != root || primaries.size() == 1);
      if (is_leaf) {
        v = p;
        break;
      }
    }
  }

  std::vector<Chain> v_cycles;
  std::vector<Chain> v_paths;
  for (const Chain& chain : chains) {
    if (chain.is_cycle) {
      if (chain.p == v) v_cycles.push_back(chain);
    } else if (chain.p == v || chain.q == v) {
      Chain oriented = chain;
      if (oriented.q == v && oriented.p != v) {
        std::swap(oriented.p, oriented.q);
        std::reverse(oriented.secs.begin(), oriented.secs.end());
      }
      if (!oriented.secs.empty()) v_paths.push_back(std::move(oriented));
    }
  }
  std::sort(v_cycles.begin(), v_cycles.end(),
            [](const Chain& a, const Chain& b) { return a.secs[0] < b.secs[0]; });
  std::sort(v_paths.begin(), v_paths.end(),
            [](const Chain& a, const Chain& b) { return a.secs[0] < b.secs[0]; });

  int blue_left = blue_count;
  auto run_out = [&]() {
    for (const auto& [u, unused] : graph) {
      if (labels[u] == Color::Empty) labels[u] = Color::Red;
    }
  };

  for (const Chain& cycle : v_cycles) {
    // With a single blue left, the first node of a fresh cycle would end
    // up isolated among reds; v itself is supported by a finished cycle.
    if (blue_left == 1) {
      labels[v] = Color::Blue;
      run_out();
      return;
    }
    for (int s : cycle.secs) {
      if (blue_left == 0) {
        run_out();
        return;
      }
      labels[s] = Color::Blue;
      --blue_left;
    }
  }
  if (blue_left == 0) {
    run_out();
    return;
  }
  labels[v] = Color::Blue;
  --blue_left;
  if (blue_left == 0) {
    run_out();
    return;
  }
  std::vector<int> a_secs;
  for (const Chain& path : v_paths) {
    for (int s : path.secs) {
      if (blue_left == 0) {
        run_out();
        return;
      }
      labels[s] = Color::Blue;
      --blue_left;
      a_secs.push_back(s);
    }
  }
  if (blue_left == 0) {
    run_out();
    return;
  }
  if (blue_left == 1) {
    // One blue to spend on a primary that touches the blue region.
    int pick = -1;
    for (int p : primaries) {
      if (labels[p] != Color::Empty) continue;
      bool touches = false;
      for (int w : graph.at(p)) {
        if (std::find(a_secs.begin(), a_secs.end(), w) != a_secs.end()) {
          touches = true;
          break;
        }
      }
      if (touches) {
        pick = p;
        break;
      }
    }
    if (pick < 0) {
      for (int p : primaries) {
        if (labels[p] == Color::Empty &&
            std::find(graph.at(p).begin(), graph.at(p).end(), v) != graph.at(p).end()) {
          pick = p;
          break;
        }
      }
    }
    if (pick < 0) {
      throw std::logic_error("no primary available for the final blue agent");
    }
    labels[pick] = Color::Blue;
    run_out();
    return;
  }

  std::unordered_set<int> remainder;
  for (const auto& [u, unused] : graph) {
    if (labels[u] == Color::Empty) remainder.insert(u);
  }
  AdjMap sub = induced(graph, remainder);
  if (!connected(sub)) {
    throw std::logic_error("remainder after removing v is disconnected");
  }
  std::set<int> sub_persistent;
  for (int p : primaries) {
    if (remainder.count(p)) sub_persistent.insert(p);
  }
  solve(sub, sub_persistent, red_count, blue_left, labels);
}

// Bridge split: distribute the agents over the two components following
// the case distinctions of the induction, then recurse or color directly.
void split_case(const AdjMap& graph, int x, int y, const std::set<int>& persistent,
                int red_count, int blue_count, std::vector<Color>& labels) {
  std::vector<int> comp_x = component_of(graph, x);
  std::vector<int> comp_y = component_of(graph, y);
  std::vector<int>* c1 = &comp_x;
  std::vector<int>* c2 = &comp_y;
  int end1 = x;
  int end2 = y;
  if (c2->size() < c1->size() ||
      (c2->size() == c1->size() && (*c2)[0] < (*c1)[0])) {
    std::swap(c1, c2);
    std::swap(end1, end2);
  }
  const int n1 = static_cast<int>(c1->size());
  const int n2 = static_cast<int>(c2->size());

  const bool red_small = red_count <= blue_count;
  const Color small_color = red_small ? Color::Red : Color::Blue;
  const Color large_color = red_small ? Color::Blue : Color::Red;
  const int small = std::min(red_count, blue_count);
  const int large = std::max(red_count, blue_count);

  auto recurse = [&](const std::vector<int>& comp, int small_part, int large_part) {
    std::unordered_set<int> keep(comp.begin(), comp.end());
    AdjMap sub = induced(graph, keep);
    std::set<int> sub_persistent;
    for (int p : persistent) {
      if (keep.count(p)) sub_persistent.insert(p);
    }
    int reds = red_small ? small_part : large_part;
    int blues = red_small ? large_part : small_part;
    solve(sub, sub_persistent, reds, blues, labels);
  };
  auto color_direct = [&](const std::vector<int>& comp, int extra, Color color) {
    // One component plus the far endpoint of the removed bridge takes one
    // color; the rest takes the other. Every node of the depleted
    // component still has a same-color neighbor inside it, and the moved
    // node leans on the bridge, which exists in the original topology.
    for (const auto& [u, unused] : graph) {
      labels[u] = (u == extra || std::find(comp.begin(), comp.end(), u) != comp.end())
                      ? color
                      : (color == Color::Red ? Color::Blue : Color::Red);
    }
  };

  if (n1 >= 4) {
    if (small >= 4) {
      int extra1 = n1 - 4;
      int large_extra1 = std::min(extra1, large - 4);
      int small_extra1 = extra1 - large_extra1;
      recurse(*c1, 2 + small_extra1, 2 + large_extra1);
      recurse(*c2, small - 2 - small_extra1, large - 2 - large_extra1);
      return;
    }
    if (small == 2 || (small == 3 && n2 >= 5)) {
      recurse(*c1, 0, n1);
      recurse(*c2, small, n2 - small);
      return;
    }
    // small = 3, n1 = n2 = 4, large = 5.
    color_direct(*c2, end1, large_color);
    return;
  }

  // n1 = 3; the component is a triangle, so three same-color agents fit.
  if (small == 3 || small >= 5) {
    recurse(*c1, 3, 0);
    recurse(*c2, small - 3, large);
    return;
  }
  if (large == 3 || large >= 5) {
    recurse(*c1, 0, 3);
    recurse(*c2, small, large - 3);
    return;
  }
  // Both counts in {2, 4}: (small, large) = (2, 4) with |C2| = 3, or
  // (4, 4) with |C2| = 5.
  if (large == n2 + 1) {
    color_direct(*c2, end1, large_color);
  } else if (large == n1 + 1) {
    color_direct(*c1, end2, large_color);
  } else {
    throw std::logic_error("unreachable split configuration");
  }
  (void)small_color;
}

void solve(const AdjMap& graph, const std::set<int>& persistent, int red_count,
           int blue_count, std::vector<Color>& labels) {
  if (static_cast<int>(graph.size()) != red_count + blue_count) {
    throw std::logic_error("agent counts out of step with the working graph");
  }
  if (red_count == 0) {
    color_all(graph, Color::Blue, labels);
    return;
  }
  if (blue_count == 0) {
    color_all(graph, Color::Red, labels);
    return;
  }

  AdjMap work = graph;
  for (;;) {
    std::vector<std::pair<int, int>> candidates;
    for (const auto& [u, nbrs] : work) {
      if (nbrs.size() < 3) continue;
      for (int w : nbrs) {
        if (u < w && work.at(w).size() >= 3) candidates.emplace_back(u, w);
      }
    }
    if (candidates.empty()) {
      base_case(work, persistent, red_count, blue_count, labels);
      return;
    }
    auto bridges = bridge_set(work);
    std::pair<int, int> chosen{-1, -1};
    for (const auto& e : candidates) {
      if (!bridges.count(e)) {
        chosen = e;
        break;
      }
    }
    if (chosen.first >= 0) {
      erase_value(work[chosen.first], chosen.second);
      erase_value(work[chosen.second], chosen.first);
      continue;
    }
    chosen = candidates.front();
    erase_value(work[chosen.first], chosen.second);
    erase_value(work[chosen.second], chosen.first);
    split_case(work, chosen.first, chosen.second, persistent, red_count, blue_count,
               labels);
    return;
  }
}

}  // namespace

Placement all_positive_constructive(const Instance& instance) {
  check_full_min_degree2(instance);
  const int t = instance.topology.node_count;
  AdjMap graph;
  for (int v = 0; v < t; ++v) graph.emplace(v, instance.topology.adjacency[v]);

  Placement placement;
  placement.labels.assign(t, Color::Empty);
  solve(graph, {}, instance.colors.red, instance.colors.blue, placement.labels);

  if (!all_agents_positive(instance, placement)) {
    throw std::logic_error("construction produced a non-positive agent");
  }
  return placement;
}

}  // namespace schelling
