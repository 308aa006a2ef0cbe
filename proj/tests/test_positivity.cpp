#include "doctest.h"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "schelling/errors.hpp"
#include "schelling/evaluate.hpp"
#include "schelling/generators.hpp"
#include "schelling/positivity.hpp"
#include "schelling/rng.hpp"
#include "schelling/types.hpp"
#include "support/graphs.hpp"

using namespace schelling;

namespace {

Errc code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a domain error");
  return Errc::BadParameters;
}

// Exhaustive check: does any placement make every agent positive?
bool brute_all_positive(const Topology& topo, int r, int b) {
  const int t = topo.node_count;
  std::vector<Color> labels(t, Color::Empty);
  std::function<bool(int, int, int)> go = [&](int node, int reds, int blues) -> bool {
    if (reds > r || blues > b) return false;
    if (node == t) {
      if (reds != r || blues != b) return false;
      for (int v = 0; v < t; ++v) {
        if (labels[v] == Color::Empty) continue;
        bool supported = false;
        for (int w : topo.adjacency[v]) {
          if (labels[w] == labels[v]) supported = true;
        }
        if (!supported) return false;
      }
      return true;
    }
    for (Color c : {Color::Red, Color::Blue, Color::Empty}) {
      labels[node] = c;
      if (go(node + 1, reds + (c == Color::Red), blues + (c == Color::Blue))) return true;
    }
    labels[node] = Color::Empty;
    return false;
  };
  return go(0, 0, 0);
}

Instance full_cycle(int t, int r) {
  GeneratorSpec spec;
  spec.family = Family::cycle;
  spec.t = t;
  spec.r = r;
  spec.b = t - r;
  return gen_named(spec);
}

Instance theta_233(int r, int b) {
  // Two degree-3 hubs joined by three internally disjoint paths.
  Topology topo = testsupport::from_edges(
      7, {{0, 2}, {1, 2}, {0, 3}, {3, 4}, {1, 4}, {0, 5}, {5, 6}, {1, 6}});
  return validate_instance(topo, {r, b});
}

}  // namespace

TEST_CASE("tree decision: four-node path and star") {
  Topology path4 = make_topology(4, {{0, 1}, {1, 2}, {2, 3}});
  Instance path_inst = validate_instance(path4, {2, 2});
  auto [ok, witness] = tree_all_positive(path_inst);
  CHECK(ok);
  REQUIRE(witness.has_value());
  CHECK(witness->count(Color::Red) == 2);
  CHECK(witness->count(Color::Blue) == 2);
  CHECK(count_positive(path_inst, *witness) == 4);

  Topology star4 = make_topology(4, {{0, 1}, {0, 2}, {0, 3}});
  auto [bad, none] = tree_all_positive(validate_instance(star4, {2, 2}));
  CHECK(!bad);
  CHECK(!none.has_value());
}

TEST_CASE("tree decision: empties and tiny cases") {
  Topology p3 = make_topology(3, {{0, 1}, {1, 2}});
  auto [ok_gap, w_gap] = tree_all_positive(validate_instance(p3, {2, 0}));
  CHECK(ok_gap);
  REQUIRE(w_gap.has_value());
  CHECK(count_positive(validate_instance(p3, {2, 0}), *w_gap) == 2);

  auto [bad_mixed, w_mixed] = tree_all_positive(validate_instance(p3, {1, 1}));
  CHECK(!bad_mixed);
  CHECK(!w_mixed.has_value());

  Topology p2 = make_topology(2, {{0, 1}});
  auto [ok_pair, w_pair] = tree_all_positive(validate_instance(p2, {2, 0}));
  CHECK(ok_pair);
  CHECK(w_pair.has_value());
  auto [bad_pair, w_none] = tree_all_positive(validate_instance(p2, {1, 1}));
  CHECK(!bad_pair);
  CHECK(!w_none.has_value());
}

TEST_CASE("tree decision rejects non-trees") {
  Instance c4 = full_cycle(4, 2);
  CHECK(code_of([&] { tree_all_positive(c4); }) == Errc::NotATree);
}

TEST_CASE("tree decision table sizes stay within the cubic bound") {
  GeneratorSpec spec;
  spec.family = Family::random_tree;
  spec.t = 30;
  spec.r = 9;
  spec.b = 12;
  spec.seed = 4242;
  Instance instance = gen_random(spec);
  std::vector<std::size_t> sizes;
  auto [ok, witness] = tree_all_positive(instance, &sizes);
  REQUIRE(sizes.size() == 30);
  const std::size_t bound = 6u * 31u * 31u * 31u;
  for (std::size_t s : sizes) CHECK(s <= bound);
  if (ok) {
    REQUIRE(witness.has_value());
    CHECK(count_positive(instance, *witness) == 21);
  }
}

TEST_CASE("tree decision agrees with exhaustive search on random trees") {
  SplitMix64 seeds(510);
  for (int i = 0; i < 30; ++i) {
    GeneratorSpec spec;
    spec.family = Family::random_tree;
    spec.t = 2 + static_cast<int>(seeds.next_below(7));  // [2, 8]
    spec.r = 1;
    spec.b = 1;
    spec.seed = seeds.next();
    Topology topo = gen_random(spec).topology;
    for (int r = 0; r <= spec.t; ++r) {
      for (int b = 0; r + b <= spec.t; ++b) {
        if (r + b < 2) continue;
        Instance instance = validate_instance(topo, {r, b});
        auto [dp, witness] = tree_all_positive(instance);
        CHECK(dp == brute_all_positive(topo, r, b));
        if (dp) {
          REQUIRE(witness.has_value());
          CHECK(witness->count(Color::Red) == r);
          CHECK(witness->count(Color::Blue) == b);
          CHECK(count_positive(instance, *witness) == r + b);
        }
      }
    }
  }
}

TEST_CASE("half-positive pins: stars and paths") {
  std::vector<std::pair<int, int>> star5_edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  Instance star5 = validate_instance(make_topology(5, star5_edges), {3, 2});
  Placement p = half_positive(star5);
  CHECK(count_positive(star5, p) == 3);

  GeneratorSpec path6;
  path6.family = Family::path;
  path6.t = 6;
  path6.r = 3;
  path6.b = 3;
  Instance path = gen_named(path6);
  CHECK(count_positive(path, half_positive(path)) == 6);

  Instance mono = validate_instance(make_topology(5, star5_edges), {5, 0});
  CHECK(count_positive(mono, half_positive(mono)) == 5);
}

TEST_CASE("half-positive requires three agents and meets its floor") {
  Topology p2 = make_topology(2, {{0, 1}});
  Instance tiny = validate_instance(p2, {1, 1});
  CHECK(code_of([&] { half_positive(tiny); }) == Errc::BadParameters);

  SplitMix64 seeds(511);
  for (int i = 0; i < 40; ++i) {
    GeneratorSpec spec;
    spec.family = Family::random_connected;
    spec.t = 3 + static_cast<int>(seeds.next_below(9));
    std::uint64_t max_m = std::uint64_t(spec.t) * (spec.t - 1) / 2;
    spec.m = spec.t - 1 + static_cast<int>(seeds.next_below(max_m - (spec.t - 1) + 1));
    int n = 3 + static_cast<int>(seeds.next_below(spec.t - 2));
    spec.r = static_cast<int>(seeds.next_below(n + 1));
    spec.b = n - spec.r;
    spec.seed = seeds.next();
    Instance instance = gen_random(spec);
    CHECK(count_positive(instance, half_positive(instance)) >= (n + 1) / 2);
  }
}

TEST_CASE("swap procedure fixes every agent on small dense instances") {
  Instance c6 = full_cycle(6, 3);
  CHECK(count_positive(c6, all_positive_swap(c6)) == 6);

  GeneratorSpec k4;
  k4.family = Family::complete;
  k4.t = 4;
  k4.r = 2;
  k4.b = 2;
  Instance complete4 = gen_named(k4);
  CHECK(count_positive(complete4, all_positive_swap(complete4)) == 4);

  Instance theta = theta_233(3, 4);
  CHECK(count_positive(theta, all_positive_swap(theta)) == 7);
}

TEST_CASE("swap procedure recovers when the farthest exchange on a longest path stalls") {
  // On this 15-node instance the seeding assignment leaves exactly one agent
  // at zero utility, and every longest path from it ends through an
  // opposite-colored node that is the sole support of its own neighbor —
  // exchanging with it merely moves the zero. The procedure must fall back
  // to the next exchange on the path and still finish fully positive.
  Topology topo = testsupport::from_edges(
      15, {{0, 7},  {0, 13}, {1, 3},  {1, 10}, {2, 9},  {2, 10}, {3, 8},
           {3, 9},  {4, 8},  {4, 9},  {5, 6},  {5, 9},  {5, 11}, {6, 11},
           {6, 12}, {7, 10}, {7, 14}, {10, 12}, {11, 13}, {12, 13}, {13, 14}});
  Instance instance = validate_instance(topo, {8, 7});
  Placement repaired = all_positive_swap(instance);
  CHECK(count_positive(instance, repaired) == 15);
  CHECK(count_positive(instance, all_positive_constructive(instance)) == 15);
}

TEST_CASE("swap procedure preconditions and cap") {
  GeneratorSpec fig5;
  fig5.family = Family::fig5_gadget;
  Instance gadget = gen_named(fig5);  // t=7, n=6
  CHECK(code_of([&] { all_positive_swap(gadget); }) == Errc::PreconditionViolated);

  Instance lopsided = full_cycle(6, 1);
  CHECK(code_of([&] { all_positive_swap(lopsided); }) == Errc::PreconditionViolated);

  GeneratorSpec path;
  path.family = Family::path;
  path.t = 4;
  path.r = 2;
  path.b = 2;
  Instance leafy = gen_named(path);
  CHECK(code_of([&] { all_positive_swap(leafy); }) == Errc::PreconditionViolated);

  Instance big = full_cycle(21, 10);
  CHECK(code_of([&] { all_positive_swap(big); }) == Errc::TooLarge);
  CHECK(count_positive(big, all_positive_swap(big, 21)) == 21);
}

TEST_CASE("constructive procedure handles canonical shapes") {
  Instance c8 = full_cycle(8, 4);
  CHECK(count_positive(c8, all_positive_constructive(c8)) == 8);

  Instance c5 = full_cycle(5, 2);
  CHECK(count_positive(c5, all_positive_constructive(c5)) == 5);

  Instance theta = theta_233(3, 4);
  CHECK(count_positive(theta, all_positive_constructive(theta)) == 7);
  Instance theta_flip = theta_233(4, 3);
  CHECK(count_positive(theta_flip, all_positive_constructive(theta_flip)) == 7);

  GeneratorSpec k4;
  k4.family = Family::complete;
  k4.t = 4;
  k4.r = 2;
  k4.b = 2;
  Instance complete4 = gen_named(k4);
  CHECK(count_positive(complete4, all_positive_constructive(complete4)) == 4);

  GeneratorSpec k5;
  k5.family = Family::complete;
  k5.t = 5;
  k5.r = 2;
  k5.b = 3;
  Instance complete5 = gen_named(k5);
  CHECK(count_positive(complete5, all_positive_constructive(complete5)) == 5);

  Instance petersen = validate_instance(testsupport::petersen(), {5, 5});
  CHECK(count_positive(petersen, all_positive_constructive(petersen)) == 10);
}

TEST_CASE("constructive procedure preconditions") {
  GeneratorSpec fig5;
  fig5.family = Family::fig5_gadget;
  Instance gadget = gen_named(fig5);
  CHECK(code_of([&] { all_positive_constructive(gadget); }) == Errc::PreconditionViolated);
  Instance lopsided = full_cycle(7, 6);
  CHECK(code_of([&] { all_positive_constructive(lopsided); }) == Errc::PreconditionViolated);
}

TEST_CASE("swap and constructive agree on random min-degree-2 instances") {
  SplitMix64 seeds(512);
  for (int i = 0; i < 50; ++i) {
    GeneratorSpec spec;
    spec.family = Family::random_min_degree2;
    spec.t = 5 + static_cast<int>(seeds.next_below(10));  // [5, 14]
    // Keep the sparse end viable for rejection sampling at larger t.
    const int extra = std::max(0, (spec.t - 6) / 2);
    spec.m = spec.t + extra + static_cast<int>(seeds.next_below(spec.t / 2 + 1 - extra));
    spec.r = 2 + static_cast<int>(seeds.next_below(spec.t - 3));
    spec.b = spec.t - spec.r;
    spec.seed = seeds.next();
    Instance instance = gen_random(spec);
    Placement via_swap = all_positive_swap(instance);
    Placement via_construction = all_positive_constructive(instance);
    CHECK(count_positive(instance, via_swap) == spec.t);
    CHECK(count_positive(instance, via_construction) == spec.t);
    CHECK(via_swap.count(Color::Red) == spec.r);
    CHECK(via_construction.count(Color::Red) == spec.r);
  }
}
