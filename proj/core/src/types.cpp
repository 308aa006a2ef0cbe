#include "schelling/types.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "schelling/errors.hpp"

namespace schelling {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotSimple: return "NotSimple";
    case Errc::TooManyAgents: return "TooManyAgents";
    case Errc::NodeEmpty: return "NodeEmpty";
    case Errc::InvalidPlacement: return "InvalidPlacement";
    case Errc::BadParameters: return "BadParameters";
    case Errc::ParseError: return "ParseError";
    case Errc::Exhausted: return "Exhausted";
    case Errc::InfeasiblePrefix: return "InfeasiblePrefix";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotATree: return "NotATree";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotRegular: return "NotRegular";
  }
  return "UnknownError";
}

bool Topology::has_edge(int u, int v) const {
  const auto& nbrs = adjacency[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

long long Topology::edge_count() const {
  long long total = 0;
  for (const auto& nbrs : adjacency) total += static_cast<long long>(nbrs.size());
  return total / 2;
}

std::vector<std::pair<int, int>> Topology::edges() const {
  std::vector<std::pair<int, int>> result;
  for (int u = 0; u < node_count; ++u) {
    for (int v : adjacency[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

bool Topology::is_connected() const {
  if (node_count <= 0) return false;
  std::vector<char> seen(node_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adjacency[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        stack.push_back(v);
      }
    }
  }
  return visited == node_count;
}

bool Topology::is_tree() const {
  return edge_count() == node_count - 1 && is_connected();
}

int Topology::regular_degree() const {
  if (node_count == 0) return -1;
  int d = degree(0);
  for (int v = 1; v < node_count; ++v) {
    if (degree(v) != d) return -1;
  }
  return d;
}

Topology make_topology(int node_count, const std::vector<std::pair<int, int>>& edge_list) {
  if (node_count <= 0) {
    throw Error(Errc::BadParameters, "node count must be positive");
  }
  Topology topo;
  topo.node_count = node_count;
  topo.adjacency.assign(node_count, {});
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
      throw Error(Errc::BadParameters,
                  "edge endpoint out of range: " + std::to_string(u) + " " +
                      std::to_string(v));
    }
    if (u == v) {
      throw Error(Errc::NotSimple, "self-loop at node " + std::to_string(u));
    }
    topo.adjacency[u].push_back(v);
    topo.adjacency[v].push_back(u);
  }
  for (int v = 0; v < node_count; ++v) {
    auto& nbrs = topo.adjacency[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw Error(Errc::NotSimple, "parallel edge at node " + std::to_string(v));
    }
  }
  return topo;
}

Instance validate_instance(const Topology& topology, const ColorCounts& colors) {
  if (topology.node_count <= 0) {
    throw Error(Errc::BadParameters, "empty topology");
  }
  for (int v = 0; v < topology.node_count; ++v) {
    const auto& nbrs = topology.adjacency[v];
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] == v) throw Error(Errc::NotSimple, "self-loop at node " + std::to_string(v));
      if (i > 0 && nbrs[i] <= nbrs[i - 1]) {
        throw Error(Errc::NotSimple, "unsorted or duplicate neighbor at node " + std::to_string(v));
      }
      if (nbrs[i] < 0 || nbrs[i] >= topology.node_count) {
        throw Error(Errc::BadParameters, "neighbor index out of range");
      }
      if (!topology.has_edge(nbrs[i], v)) {
        throw Error(Errc::NotSimple, "asymmetric adjacency at node " + std::to_string(v));
      }
    }
  }
  if (!topology.is_connected()) {
    throw Error(Errc::Disconnected, "topology is not connected");
  }
  if (colors.red < 0 || colors.blue < 0) {
    throw Error(Errc::BadParameters, "negative agent count");
  }
  if (colors.n() < 2) {
    throw Error(Errc::BadParameters, "need at least 2 agents");
  }
  if (colors.n() > topology.node_count) {
    throw Error(Errc::TooManyAgents,
                std::to_string(colors.n()) + " agents > " +
                    std::to_string(topology.node_count) + " nodes");
  }
  return Instance{topology, colors};
}

int Placement::count(Color c) const {
  int total = 0;
  for (Color label : labels) {
    if (label == c) ++total;
  }
  return total;
}

void validate_placement(const Instance& instance, const Placement& placement) {
  if (placement.size() != instance.topology.node_count) {
    throw Error(Errc::InvalidPlacement,
                "placement length " + std::to_string(placement.size()) +
                    " != node count " + std::to_string(instance.topology.node_count));
  }
  int red = placement.count(Color::Red);
  int blue = placement.count(Color::Blue);
  if (red != instance.colors.red || blue != instance.colors.blue) {
    throw Error(Errc::InvalidPlacement,
                "label counts (" + std::to_string(red) + "," + std::to_string(blue) +
                    ") != (" + std::to_string(instance.colors.red) + "," +
                    std::to_string(instance.colors.blue) + ")");
  }
}

}  // namespace schelling
