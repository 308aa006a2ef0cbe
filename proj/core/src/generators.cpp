#include "schelling/generators.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "schelling/errors.hpp"
#include "schelling/rng.hpp"

namespace schelling {

namespace {

constexpr int kMaxRejections = 10'000;

void require(bool condition, const std::string& what) {
  if (!condition) throw Error(Errc::BadParameters, what);
}

int value_or(int value, int fallback) { return value < 0 ? fallback : value; }

// Uniform labeled tree from a Pruefer sequence drawn off rng.
std::vector<std::pair<int, int>> random_tree_edges(int t, SplitMix64& rng) {
  std::vector<int> seq(t >= 3 ? t - 2 : 0);
  for (int& v : seq) v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(t)));

  std::vector<int> deg(t, 1);
  for (int v : seq) ++deg[v];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(t - 1);
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : seq) {
    edges.emplace_back(leaf, v);
    if (--deg[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, t - 1);
  return edges;
}

Topology random_connected_topology(int t, int m, SplitMix64& rng, int& rejections) {
  auto edges = random_tree_edges(t, rng);
  Topology topo = make_topology(t, edges);
  int extra = m - (t - 1);
  while (extra > 0) {
    int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(t)));
    int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(t)));
    if (u == v || topo.has_edge(u, v)) {
      if (++rejections > kMaxRejections) {
        throw Error(Errc::Exhausted, "rejection sampling exceeded 10000 retries");
      }
      continue;
    }
    auto& au = topo.adjacency[u];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = topo.adjacency[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    --extra;
  }
  return topo;
}

}  // namespace

Family family_from_name(const std::string& name) {
  if (name == "star") return Family::star;
  if (name == "complete") return Family::complete;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  if (name == "cycle") return Family::cycle;
  if (name == "path") return Family::path;
  if (name == "fig5_gadget") return Family::fig5_gadget;
  if (name == "random_connected") return Family::random_connected;
  if (name == "random_tree") return Family::random_tree;
  if (name == "random_min_degree2") return Family::random_min_degree2;
  throw Error(Errc::BadParameters, "unknown family '" + name + "'");
}

const char* family_name(Family family) {
  switch (family) {
    case Family::star: return "star";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::fig5_gadget: return "fig5_gadget";
    case Family::random_connected: return "random_connected";
    case Family::random_tree: return "random_tree";
    case Family::random_min_degree2: return "random_min_degree2";
  }
  return "unknown";
}

bool family_is_random(Family family) {
  return family == Family::random_connected || family == Family::random_tree ||
         family == Family::random_min_degree2;
}

Instance gen_named(const GeneratorSpec& spec) {
  const int t = spec.t;
  std::vector<std::pair<int, int>> edges;
  int r = spec.r;
  int b = spec.b;
  switch (spec.family) {
    case Family::star: {
      require(t >= 5, "star needs t >= 5");
      r = value_or(r, 2);
      b = value_or(b, t - 2);
      require(r == 2, "star family fixes r = 2");
      require(b == t - 2, "star family fixes b = t - 2");
      for (int v = 1; v < t; ++v) edges.emplace_back(0, v);
      break;
    }
    case Family::complete: {
      require(t >= 2, "complete needs t >= 2");
      require(r >= 0 && b >= 0, "complete needs r and b");
      for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) edges.emplace_back(u, v);
      break;
    }
    case Family::complete_bipartite: {
      require(t >= 4 && t % 4 == 0, "complete_bipartite needs t divisible by 4");
      r = value_or(r, t / 2);
      b = value_or(b, t / 2);
      require(r == t / 2 && b == t / 2, "complete_bipartite fixes r = b = t/2");
      for (int u = 0; u < t / 2; ++u)
        for (int v = t / 2; v < t; ++v) edges.emplace_back(u, v);
      break;
    }
    case Family::cycle: {
      require(t >= 3, "cycle needs t >= 3");
      require(r >= 0 && b >= 0, "cycle needs r and b");
      for (int v = 0; v + 1 < t; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(0, t - 1);
      break;
    }
    case Family::path: {
      require(t >= 2, "path needs t >= 2");
      require(r >= 0 && b >= 0, "path needs r and b");
      for (int v = 0; v + 1 < t; ++v) edges.emplace_back(v, v + 1);
      break;
    }
    case Family::fig5_gadget: {
      require(t == 0 || t == 7, "fig5_gadget is a fixed 7-node graph");
      r = value_or(r, 3);
      b = value_or(b, 3);
      require(r == 3 && b == 3, "fig5_gadget fixes r = b = 3");
      for (int v = 1; v <= 6; ++v) edges.emplace_back(0, v);
      edges.emplace_back(1, 2);
      edges.emplace_back(3, 4);
      edges.emplace_back(5, 6);
      return validate_instance(make_topology(7, edges), ColorCounts{r, b});
    }
    default:
      throw Error(Errc::BadParameters,
                  std::string(family_name(spec.family)) + " is a random family");
  }
  return validate_instance(make_topology(t, edges), ColorCounts{r, b});
}

Instance gen_random(const GeneratorSpec& spec) {
  const int t = spec.t;
  require(spec.r >= 0 && spec.b >= 0, "random families need r and b");
  SplitMix64 rng(spec.seed);
  int rejections = 0;
  Topology topo;
  switch (spec.family) {
    case Family::random_tree: {
      require(t >= 2, "random_tree needs t >= 2");
      topo = make_topology(t, random_tree_edges(t, rng));
      break;
    }
    case Family::random_connected: {
      long long max_m = static_cast<long long>(t) * (t - 1) / 2;
      require(t >= 2, "random_connected needs t >= 2");
      require(spec.m >= t - 1 && spec.m <= max_m,
              "random_connected needs t-1 <= m <= t(t-1)/2");
      topo = random_connected_topology(t, spec.m, rng, rejections);
      break;
    }
    case Family::random_min_degree2: {
      long long max_m = static_cast<long long>(t) * (t - 1) / 2;
      require(t >= 3, "random_min_degree2 needs t >= 3");
      require(spec.m >= t && spec.m <= max_m,
              "random_min_degree2 needs t <= m <= t(t-1)/2");
      for (;;) {
        topo = random_connected_topology(t, spec.m, rng, rejections);
        int min_deg = topo.degree(0);
        for (int v = 1; v < t; ++v) min_deg = std::min(min_deg, topo.degree(v));
        if (min_deg >= 2) break;
        if (++rejections > kMaxRejections) {
          throw Error(Errc::Exhausted, "rejection sampling exceeded 10000 retries");
        }
      }
      break;
    }
    default:
      throw Error(Errc::BadParameters,
                  std::string(family_name(spec.family)) + " is not a random family");
  }
  return validate_instance(topo, ColorCounts{spec.r, spec.b});
}

Instance generate(const GeneratorSpec& spec) {
  return family_is_random(spec.family) ? gen_random(spec) : gen_named(spec);
}

}  // namespace schelling
