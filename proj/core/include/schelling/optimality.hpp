#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "schelling/evaluate.hpp"
#include "schelling/rat.hpp"
#include "schelling/types.hpp"

namespace schelling {

enum class Notion { PO, UVO, GWO, MaxWelfare };

Notion notion_from_name(const std::string& name);
const char* notion_name(Notion notion);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Number of valid placements: C(t, n) * C(n, r).
BigInt placement_count(const Instance& instance);

// Cached per-placement data for repeated dominance tests.
struct SortedUtilities {
  std::vector<Rat> red;
  std::vector<Rat> blue;
  std::vector<Rat> all;
  Rat red_total;
  Rat blue_total;
  Rat total;
};

SortedUtilities sorted_utilities(const Instance& instance, const Placement& placement);

// PO: weak domination with one strict improvement on the per-color sorted
// vectors. UVO: same on the combined sorted vector. GWO: same on the group
// totals. MaxWelfare: strictly larger total.
bool dominates(const SortedUtilities& a, const SortedUtilities& b, Notion notion);

// Weak domination with at least one strict improvement, componentwise on
// the per-color sorted utility vectors (red and blue separately).
bool pareto_dominates(const Instance& instance, const Placement& p1,
                      const Placement& p2);

// Same test on (red_total, blue_total).
bool group_welfare_dominates(const Instance& instance, const Placement& p1,
                             const Placement& p2);

// Same test on the length-n sorted utility vector over all agents.
bool utility_vector_dominates(const Instance& instance, const Placement& p1,
                              const Placement& p2);

// Visits every valid placement exactly once, in lexicographic order of
// (occupied node set, red subset of it). Throws TooLarge (with the exact
// count) when placement_count exceeds cap.
void for_each_placement(const Instance& instance,
                        const std::function<void(const Placement&)>& visit,
                        std::uint64_t cap = kDefaultEnumerationCap);

// Same order, but the visitor may stop the scan by returning false.
// Returns true when every placement was visited.
bool for_each_placement_while(const Instance& instance,
                              const std::function<bool(const Placement&)>& visit,
                              std::uint64_t cap = kDefaultEnumerationCap);

// True iff no other placement dominates it under the notion (MaxWelfare:
// social welfare equals the global maximum). Exhaustive scan.
bool is_optimal(const Instance& instance, const Placement& placement,
                Notion notion, std::uint64_t cap = kDefaultEnumerationCap);

// Exact optima with lexicographically first witnesses.
std::pair<Rat, Placement> max_welfare(const Instance& instance,
                                      std::uint64_t cap = kDefaultEnumerationCap);
std::pair<Rat, Placement> min_welfare_among(const Instance& instance, Notion notion,
                                            std::uint64_t cap = kDefaultEnumerationCap);

struct PriceReport {
  Notion notion;
  Rat max_welfare;
  Rat min_welfare_among_notion;
  // max/min with 0/0 = 1. Always >= 1.
  Rat price;
  Placement witness_max;
  Placement witness_min;
};

PriceReport price_of(const Instance& instance, Notion notion,
                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace schelling
