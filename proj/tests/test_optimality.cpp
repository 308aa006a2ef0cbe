#include "doctest.h"

#include <string>
#include <vector>

#include "schelling/errors.hpp"
#include "schelling/generators.hpp"
#include "schelling/io.hpp"
#include "schelling/optimality.hpp"
#include "schelling/rng.hpp"

using namespace schelling;

namespace {

Instance named(Family family, int t, int r = -1, int b = -1) {
  GeneratorSpec spec;
  spec.family = family;
  spec.t = t;
  spec.r = r;
  spec.b = b;
  return gen_named(spec);
}

}  // namespace

TEST_CASE("notion names round-trip") {
  for (const char* name : {"po", "uvo", "gwo", "max"}) {
    CHECK(std::string(notion_name(notion_from_name(name))) == name);
  }
  CHECK_THROWS_AS(notion_from_name("pareto"), Error);
}

TEST_CASE("placement_count is C(t,n) * C(n,r)") {
  CHECK(placement_count(named(Family::complete, 4, 2, 2)) == BigInt(6));
  CHECK(placement_count(named(Family::star, 8)) == BigInt(28));
  CHECK(placement_count(named(Family::fig5_gadget, 7)) == BigInt(140));
  CHECK(placement_count(named(Family::path, 5, 1, 2)) == BigInt(30));
}

TEST_CASE("for_each_placement visits each placement exactly once") {
  Instance path = named(Family::path, 5, 1, 2);
  std::vector<std::string> seen;
  for_each_placement(path, [&](const Placement& placement) {
    seen.push_back(serialize_placement(placement));
    CHECK(placement.count(Color::Red) == 1);
    CHECK(placement.count(Color::Blue) == 2);
  });
  CHECK(seen.size() == 30);
  std::vector<std::string> unique = seen;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  CHECK(unique.size() == 30);
  // lexicographic in (occupied set, red subset): first visits nodes {0,1,2}
  CHECK(seen.front() == "RBBEE\n");
}

TEST_CASE("for_each_placement_while can stop early") {
  Instance k4 = named(Family::complete, 4, 2, 2);
  int visited = 0;
  bool completed = for_each_placement_while(k4, [&](const Placement&) {
    ++visited;
    return visited < 3;
  });
  CHECK(!completed);
  CHECK(visited == 3);
  visited = 0;
  completed = for_each_placement_while(k4, [&](const Placement&) {
    ++visited;
    return true;
  });
  CHECK(completed);
  CHECK(visited == 6);
}

TEST_CASE("enumeration respects the cap") {
  Instance k4 = named(Family::complete, 4, 2, 2);
  CHECK_THROWS_AS(for_each_placement(k4, [](const Placement&) {}, 5), Error);
  try {
    max_welfare(k4, 5);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
  CHECK_NOTHROW(for_each_placement(k4, [](const Placement&) {}, 6));
}

TEST_CASE("dominance relations on the star separating pair") {
  Instance star = named(Family::star, 8);
  Placement left = parse_placement("RRBBBBBB\n", star);   // welfare 8/7
  Placement right = parse_placement("BRRBBBBB\n", star);  // welfare 40/7
  CHECK(!group_welfare_dominates(star, right, left));  // reds lose everything
  CHECK(!group_welfare_dominates(star, left, right));
  CHECK(utility_vector_dominates(star, right, left));
  CHECK(!pareto_dominates(star, right, left));
  CHECK(!pareto_dominates(star, left, left));
  CHECK(!utility_vector_dominates(star, left, left));
  CHECK(!group_welfare_dominates(star, left, left));
}

TEST_CASE("dominance relations on the complete-bipartite separating pair") {
  Instance k44 = named(Family::complete_bipartite, 8);
  Placement left = parse_placement("RBBBRRRB\n", k44);   // welfare 3
  Placement right = parse_placement("RRBBRRBB\n", k44);  // welfare 4
  CHECK(group_welfare_dominates(k44, right, left));
  CHECK(!utility_vector_dominates(k44, right, left));
  CHECK(!pareto_dominates(k44, right, left));
}

TEST_CASE("optimality classifications match the separating instances") {
  Instance star = named(Family::star, 8);
  Placement star_left = parse_placement("RRBBBBBB\n", star);
  CHECK(is_optimal(star, star_left, Notion::GWO));
  CHECK(!is_optimal(star, star_left, Notion::UVO));
  CHECK(is_optimal(star, star_left, Notion::PO));
  CHECK(!is_optimal(star, star_left, Notion::MaxWelfare));

  Instance k44 = named(Family::complete_bipartite, 8);
  Placement fig_left = parse_placement("RBBBRRRB\n", k44);
  Placement fig_right = parse_placement("RRBBRRBB\n", k44);
  CHECK(is_optimal(k44, fig_left, Notion::UVO));
  CHECK(!is_optimal(k44, fig_left, Notion::GWO));
  CHECK(is_optimal(k44, fig_right, Notion::MaxWelfare));
  CHECK(is_optimal(k44, fig_right, Notion::GWO));
  CHECK(is_optimal(k44, fig_right, Notion::UVO));
}

TEST_CASE("extremes and prices on the pinned instances") {
  Instance star = named(Family::star, 8);
  auto [star_max, star_max_witness] = max_welfare(star);
  CHECK(star_max == make_rat(40, 7));
  CHECK(social_welfare(star, star_max_witness) == make_rat(40, 7));
  auto [star_min, star_min_witness] = min_welfare_among(star, Notion::GWO);
  CHECK(star_min == make_rat(8, 7));
  CHECK(is_optimal(star, star_min_witness, Notion::GWO));
  PriceReport star_price = price_of(star, Notion::GWO);
  CHECK(star_price.price == Rat(5));
  CHECK(star_price.max_welfare == make_rat(40, 7));
  CHECK(star_price.min_welfare_among_notion == make_rat(8, 7));

  Instance k44 = named(Family::complete_bipartite, 8);
  PriceReport k44_price = price_of(k44, Notion::UVO);
  CHECK(k44_price.price == make_rat(4, 3));
  CHECK(k44_price.max_welfare == Rat(4));
  CHECK(k44_price.min_welfare_among_notion == Rat(3));

  PriceReport max_price = price_of(k44, Notion::MaxWelfare);
  CHECK(max_price.price == Rat(1));
}

TEST_CASE("optimal sets obey the implication lattice on random instances") {
  SplitMix64 seeds(410);
  for (int i = 0; i < 12; ++i) {
    GeneratorSpec spec;
    spec.family = Family::random_connected;
    spec.t = 4 + static_cast<int>(seeds.next_below(3));
    std::uint64_t max_m = std::uint64_t(spec.t) * (spec.t - 1) / 2;
    spec.m = spec.t - 1 + static_cast<int>(seeds.next_below(max_m - (spec.t - 1) + 1));
    int n = 3 + static_cast<int>(seeds.next_below(spec.t - 2));
    spec.r = 1 + static_cast<int>(seeds.next_below(n - 1));
    spec.b = n - spec.r;
    spec.seed = seeds.next();
    Instance instance = gen_random(spec);
    for_each_placement(instance, [&](const Placement& placement) {
      bool max_w = is_optimal(instance, placement, Notion::MaxWelfare);
      bool gwo = is_optimal(instance, placement, Notion::GWO);
      bool uvo = is_optimal(instance, placement, Notion::UVO);
      bool po = is_optimal(instance, placement, Notion::PO);
      if (max_w) {
        CHECK(gwo);
        CHECK(uvo);
      }
      if (gwo) CHECK(po);
      if (uvo) CHECK(po);
    });
  }
}

TEST_CASE("price witnesses are consistent with their report") {
  Instance fig5 = named(Family::fig5_gadget, 7);
  for (Notion notion : {Notion::PO, Notion::UVO, Notion::GWO, Notion::MaxWelfare}) {
    PriceReport report = price_of(fig5, notion);
    CHECK(report.price >= Rat(1));
    CHECK(social_welfare(fig5, report.witness_max) == report.max_welfare);
    CHECK(social_welfare(fig5, report.witness_min) == report.min_welfare_among_notion);
    CHECK(is_optimal(fig5, report.witness_min, notion));
    CHECK(report.max_welfare >= report.min_welfare_among_notion);
  }
}
