#include "doctest.h"

#include <cstdint>
#include <functional>
#include <vector>

#include "schelling/errors.hpp"
#include "schelling/evaluate.hpp"
#include "schelling/hardness.hpp"
#include "schelling/optimality.hpp"
#include "schelling/rng.hpp"
#include "schelling/types.hpp"
#include "schelling/welfare.hpp"
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

}  // namespace

TEST_CASE("clique numbers of named graphs") {
  CHECK(brute_force_max_clique(testsupport::petersen()) == 2);
  CHECK(brute_force_max_clique(testsupport::circulant(4, {1, 2})) == 4);
  CHECK(brute_force_max_clique(testsupport::circulant(5, {1, 2})) == 5);
  CHECK(brute_force_max_clique(testsupport::circulant(6, {1})) == 2);
  CHECK(brute_force_max_clique(testsupport::circulant(7, {1, 2})) == 3);
  CHECK(brute_force_max_clique(make_topology(4, {{0, 1}, {0, 2}, {0, 3}})) == 2);
  CHECK(brute_force_max_clique(make_topology(1, {})) == 1);
  CHECK(code_of([] { brute_force_max_clique(testsupport::circulant(26, {1})); }) ==
        Errc::TooLarge);
}

TEST_CASE("reduction thresholds on pinned graphs") {
  ReductionOutput p2 = clique_to_schelling(testsupport::petersen(), 2);
  CHECK(p2.threshold == make_rat(22, 3));
  CHECK(p2.instance.colors.red == 2);
  CHECK(p2.instance.colors.blue == 8);
  CHECK(p2.regularity == 3);
  CHECK(p2.source_k == 2);

  ReductionOutput p3 = clique_to_schelling(testsupport::petersen(), 3);
  CHECK(p3.threshold == Rat(8));

  ReductionOutput k4 = clique_to_schelling(testsupport::circulant(4, {1, 2}), 3);
  CHECK(k4.threshold == Rat(2));

  ReductionOutput c6 = clique_to_schelling(testsupport::circulant(6, {1}), 3);
  CHECK(c6.threshold == Rat(6));
}

TEST_CASE("reduction rejects bad inputs") {
  Topology star = make_topology(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(code_of([&] { clique_to_schelling(star, 2); }) == Errc::NotRegular);

  Topology two_triangles =
      make_topology(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(code_of([&] { clique_to_schelling(two_triangles, 2); }) == Errc::Disconnected);

  Topology c5 = testsupport::circulant(5, {1});
  CHECK(code_of([&] { clique_to_schelling(c5, 1); }) == Errc::BadParameters);
  CHECK(code_of([&] { clique_to_schelling(c5, 6); }) == Errc::BadParameters);
}

TEST_CASE("threshold decision matches the clique question on pinned graphs") {
  auto [pet2, w2] = decide_welfare_threshold(clique_to_schelling(testsupport::petersen(), 2).instance,
                                             make_rat(22, 3));
  CHECK(pet2);
  REQUIRE(w2.has_value());
  ReductionOutput pet3_red = clique_to_schelling(testsupport::petersen(), 3);
  auto [pet3, w3] = decide_welfare_threshold(pet3_red.instance, pet3_red.threshold);
  CHECK(!pet3);
  CHECK(!w3.has_value());
  auto [best, best_witness] = max_welfare(pet3_red.instance);
  CHECK(best == make_rat(20, 3));

  ReductionOutput k4_red = clique_to_schelling(testsupport::circulant(4, {1, 2}), 3);
  auto [k4_ok, k4_witness] = decide_welfare_threshold(k4_red.instance, k4_red.threshold);
  CHECK(k4_ok);
  REQUIRE(k4_witness.has_value());
  CHECK(social_welfare(k4_red.instance, *k4_witness) >= Rat(2));
}

TEST_CASE("threshold decision agrees with the clique number on random regular graphs") {
  SplitMix64 seeds(610);
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{
           {6, 3}, {7, 4}, {8, 3}, {8, 5}, {9, 4}, {10, 3}}) {
    Topology graph = testsupport::random_regular(n, d, seeds.next());
    int omega = brute_force_max_clique(graph);
    for (int k = 2; k <= n; ++k) {
      ReductionOutput reduction = clique_to_schelling(graph, k);
      auto [decided, witness] = decide_welfare_threshold(reduction.instance,
                                                         reduction.threshold);
      CHECK(decided == (omega >= k));
      if (decided) {
        REQUIRE(witness.has_value());
        CHECK(social_welfare(reduction.instance, *witness) >= reduction.threshold);
      }
    }
  }
}

TEST_CASE("cut identity equals the direct evaluation on regular graphs") {
  SplitMix64 seeds(611);
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{6, 2}, {8, 3}, {10, 4}}) {
    Topology graph = testsupport::random_regular(n, d, seeds.next());
    for (int r : {2, n / 2}) {
      Instance instance = validate_instance(graph, {r, n - r});
      for (int s = 0; s < 20; ++s) {
        Placement placement = uniform_random_assignment(instance, seeds.next());
        CHECK(welfare_from_cut(instance, placement) ==
              social_welfare(instance, placement));
      }
    }
  }
}

TEST_CASE("cut identity rejects irregular or partially occupied inputs") {
  Topology star = make_topology(4, {{0, 1}, {0, 2}, {0, 3}});
  Instance star_inst = validate_instance(star, {2, 2});
  Placement p{{Color::Red, Color::Red, Color::Blue, Color::Blue}};
  CHECK(code_of([&] { welfare_from_cut(star_inst, p); }) == Errc::NotRegular);

  Topology c6 = testsupport::circulant(6, {1});
  Instance sparse = validate_instance(c6, {2, 2});
  Placement sp{{Color::Red, Color::Red, Color::Blue, Color::Blue, Color::Empty, Color::Empty}};
  CHECK(code_of([&] { welfare_from_cut(sparse, sp); }) == Errc::PreconditionViolated);
}

TEST_CASE("degree sum identity links cliques, monochromatic edges, and the cut") {
  SplitMix64 seeds(612);
  Topology graph = testsupport::random_regular(8, 4, seeds.next());
  Instance instance = validate_instance(graph, {3, 5});
  for (int s = 0; s < 10; ++s) {
    Placement placement = uniform_random_assignment(instance, seeds.next());
    long long same_red = 0, same_blue = 0, cut = 0;
    for (const auto& [u, v] : graph.edges()) {
      if (placement.labels[u] == placement.labels[v]) {
        (placement.labels[u] == Color::Red ? same_red : same_blue) += 1;
      } else {
        ++cut;
      }
    }
    auto [profile, summary] = evaluate(instance, placement);
    CHECK(summary.bichromatic_edges == cut);
    CHECK(2 * same_red + cut == 3LL * 4);   // red degree sum
    CHECK(2 * same_blue + cut == 5LL * 4);  // blue degree sum
    CHECK(summary.total == Rat(8) - make_rat(2 * cut, 4));
  }
}
