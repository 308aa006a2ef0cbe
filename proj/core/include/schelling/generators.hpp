#pragma once

#include <cstdint>
#include <string>

#include "schelling/types.hpp"

namespace schelling {

enum class Family {
  star,
  complete,
  complete_bipartite,
  cycle,
  path,
  fig5_gadget,
  random_connected,
  random_tree,
  random_min_degree2,
};

Family family_from_name(const std::string& name);
const char* family_name(Family family);
bool family_is_random(Family family);

// t = node count; m = edge count (random_connected / random_min_degree2
// only); r, b = agent counts; seed for random families. Negative r/b means
// "use the family default" where one exists.
struct GeneratorSpec {
  Family family = Family::path;
  int t = 0;
  int m = -1;
  int r = -1;
  int b = -1;
  std::uint64_t seed = 0;
};

// Feasibility per family (BadParameters otherwise):
//   star: t >= 5, r = 2, b = t - 2 (one center, node 0, plus leaves)
//   complete, cycle, path: r + b <= t, n >= 2 (cycle needs t >= 3)
//   complete_bipartite: t % 4 == 0, r = b = t/2; sides {0..t/2-1}, {t/2..t-1}
//   fig5_gadget: t = 7, r = b = 3; center node 0 adjacent to 1..6, outer
//     edges {1,2}, {3,4}, {5,6}
Instance gen_named(const GeneratorSpec& spec);

// Deterministic in (family, parameters, seed).
//   random_tree: uniform over labeled trees (Pruefer sequence)
//   random_connected: uniform random tree plus distinct uniform extra edges
//   random_min_degree2: random_connected retried until min degree >= 2
// Rejection sampling beyond 10000 retries raises Exhausted.
Instance gen_random(const GeneratorSpec& spec);

// Dispatches on family_is_random.
Instance generate(const GeneratorSpec& spec);

}  // namespace schelling
