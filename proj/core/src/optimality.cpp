#include "schelling/optimality.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "schelling/errors.hpp"

namespace schelling {

namespace {

// Componentwise a >= b everywhere with a > b somewhere. Vectors have equal
// length by construction (same agent counts).
void weak_strict(const std::vector<Rat>& a, const std::vector<Rat>& b, bool& weak,
                 bool& strict) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) {
      weak = false;
      return;
    }
    if (a[i] > b[i]) strict = true;
  }
}

bool next_combination(std::vector<int>& comb, int universe) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < universe - (k - i)) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace

Notion notion_from_name(const std::string& name) {
  if (name == "po") return Notion::PO;
  if (name == "uvo") return Notion::UVO;
  if (name == "gwo") return Notion::GWO;
  if (name == "max") return Notion::MaxWelfare;
  throw Error(Errc::BadParameters, "unknown notion '" + name + "'");
}

const char* notion_name(Notion notion) {
  switch (notion) {
    case Notion::PO: return "po";
    case Notion::UVO: return "uvo";
    case Notion::GWO: return "gwo";
    case Notion::MaxWelfare: return "max";
  }
  return "unknown";
}

BigInt placement_count(const Instance& instance) {
  const int t = instance.topology.node_count;
  const int n = instance.colors.n();
  return binomial(t, n) * binomial(n, instance.colors.red);
}

SortedUtilities sorted_utilities(const Instance& instance, const Placement& placement) {
  auto [profile, summary] = evaluate(instance, placement);
  return SortedUtilities{std::move(profile.sorted_red), std::move(profile.sorted_blue),
                         std::move(profile.sorted_all), std::move(summary.red_total),
                         std::move(summary.blue_total), std::move(summary.total)};
}

bool dominates(const SortedUtilities& a, const SortedUtilities& b, Notion notion) {
  bool weak = true;
  bool strict = false;
  switch (notion) {
    case Notion::PO:
      weak_strict(a.red, b.red, weak, strict);
      if (weak) weak_strict(a.blue, b.blue, weak, strict);
      break;
    case Notion::UVO:
      weak_strict(a.all, b.all, weak, strict);
      break;
    case Notion::GWO:
      if (a.red_total < b.red_total || a.blue_total < b.blue_total) {
        weak = false;
      } else {
        strict = a.red_total > b.red_total || a.blue_total > b.blue_total;
      }
      break;
    case Notion::MaxWelfare:
      return a.total > b.total;
  }
  return weak && strict;
}

bool pareto_dominates(const Instance& instance, const Placement& p1, const Placement& p2) {
  return dominates(sorted_utilities(instance, p1), sorted_utilities(instance, p2),
                   Notion::PO);
}

bool group_welfare_dominates(const Instance& instance, const Placement& p1,
                             const Placement& p2) {
  return dominates(sorted_utilities(instance, p1), sorted_utilities(instance, p2),
                   Notion::GWO);
}

bool utility_vector_dominates(const Instance& instance, const Placement& p1,
                              const Placement& p2) {
  return dominates(sorted_utilities(instance, p1), sorted_utilities(instance, p2),
                   Notion::UVO);
}

bool for_each_placement_while(const Instance& instance,
                              const std::function<bool(const Placement&)>& visit,
                              std::uint64_t cap) {
  BigInt count = placement_count(instance);
  if (count > cap) {
    throw Error(Errc::TooLarge, "placement count " + count.str() + " exceeds cap " +
                                    std::to_string(cap));
  }
  const int t = instance.topology.node_count;
  const int n = instance.colors.n();
  const int r = instance.colors.red;

  std::vector<int> occupied(n);
  for (int i = 0; i < n; ++i) occupied[i] = i;
  Placement placement;
  placement.labels.assign(t, Color::Empty);
  do {
    std::vector<int> red_positions(r);
    for (int i = 0; i < r; ++i) red_positions[i] = i;
    do {
      for (int v : occupied) placement.labels[v] = Color::Blue;
      for (int i : red_positions) placement.labels[occupied[i]] = Color::Red;
      bool keep_going = visit(placement);
      for (int v : occupied) placement.labels[v] = Color::Empty;
      if (!keep_going) return false;
    } while (next_combination(red_positions, n));
  } while (next_combination(occupied, t));
  return true;
}

void for_each_placement(const Instance& instance,
                        const std::function<void(const Placement&)>& visit,
                        std::uint64_t cap) {
  for_each_placement_while(
      instance,
      [&](const Placement& placement) {
        visit(placement);
        return true;
      },
      cap);
}

bool is_optimal(const Instance& instance, const Placement& placement, Notion notion,
                std::uint64_t cap) {
  validate_placement(instance, placement);
  SortedUtilities mine = sorted_utilities(instance, placement);
  bool optimal = true;
  for_each_placement(
      instance,
      [&](const Placement& other) {
        if (optimal && dominates(sorted_utilities(instance, other), mine, notion)) {
          optimal = false;
        }
      },
      cap);
  return optimal;
}

std::pair<Rat, Placement> max_welfare(const Instance& instance, std::uint64_t cap) {
  Rat best(-1);
  Placement witness;
  for_each_placement(
      instance,
      [&](const Placement& p) {
        Rat sw = social_welfare(instance, p);
        if (sw > best) {
          best = sw;
          witness = p;
        }
      },
      cap);
  return {std::move(best), std::move(witness)};
}

std::pair<Rat, Placement> min_welfare_among(const Instance& instance, Notion notion,
                                            std::uint64_t cap) {
  if (notion == Notion::MaxWelfare) {
    return max_welfare(instance, cap);
  }
  bool found = false;
  Rat best(0);
  Placement witness;
  for_each_placement(
      instance,
      [&](const Placement& p) {
        Rat sw = social_welfare(instance, p);
        if (found && sw >= best) return;
        if (is_optimal(instance, p, notion, cap)) {
          found = true;
          best = sw;
          witness = p;
        }
      },
      cap);
  if (!found) {
    // Dominance is a strict partial order on a finite set, so maximal
    // elements always exist.
    throw std::logic_error("no optimal placement found");
  }
  return {std::move(best), std::move(witness)};
}

PriceReport price_of(const Instance& instance, Notion notion, std::uint64_t cap) {
  auto [max_sw, max_witness] = max_welfare(instance, cap);
  auto [min_sw, min_witness] = min_welfare_among(instance, notion, cap);
  Rat price;
  if (min_sw == 0) {
    if (max_sw != 0) {
      // A zero-welfare placement cannot be optimal while a positive one
      // exists; reaching this line would falsify the dominance logic.
      throw std::logic_error("zero minimum with positive maximum");
    }
    price = 1;
  } else {
    price = max_sw / min_sw;
  }
  return PriceReport{notion, std::move(max_sw), std::move(min_sw), std::move(price),
                     std::move(max_witness), std::move(min_witness)};
}

}  // namespace schelling
