// schelling-lab: command-line front end for the schelling_core library.
//
// Subcommands: gen, eval, alg1, expect, check, price, tree-positive,
// positive, reduce, sweep. Exit codes: 0 success, 1 domain error (the
// error name and detail go to stderr), 2 usage error.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "schelling/errors.hpp"
#include "schelling/evaluate.hpp"
#include "schelling/generators.hpp"
#include "schelling/hardness.hpp"
#include "schelling/io.hpp"
#include "schelling/optimality.hpp"
#include "schelling/positivity.hpp"
#include "schelling/rng.hpp"
#include "schelling/welfare.hpp"

namespace {

using namespace schelling;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::ParseError, "cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(Errc::ParseError, "cannot open " + path + " for writing");
  }
  out << text;
}

std::string bool_name(bool value) { return value ? "true" : "false"; }

Instance load_instance(const std::string& path) { return parse_instance(read_input(path)); }

Placement load_placement(const std::string& path, const Instance& instance) {
  return parse_placement(read_input(path), instance);
}

// ---------------------------------------------------------------------------
// Plain subcommands.

struct GenOptions {
  std::string family;
  int t = 0;
  int m = -1;
  int r = -1;
  int b = -1;
  std::uint64_t seed = 0;
  std::string output;
};

void run_gen(const GenOptions& opt) {
  GeneratorSpec spec;
  spec.family = family_from_name(opt.family);
  spec.t = opt.t;
  spec.m = opt.m;
  spec.r = opt.r;
  spec.b = opt.b;
  spec.seed = opt.seed;
  write_output(opt.output, serialize_instance(generate(spec)));
}

struct EvalOptions {
  std::string instance_path;
  std::string placement_path;
};

void run_eval(const EvalOptions& opt) {
  if (opt.instance_path == "-" && opt.placement_path == "-") {
    throw Error(Errc::BadParameters, "at most one input may come from stdin");
  }
  Instance instance = load_instance(opt.instance_path);
  Placement placement = load_placement(opt.placement_path, instance);
  auto [profile, summary] = evaluate(instance, placement);
  std::ostringstream out;
  out << "SW=" << rat_to_string(summary.total) << " SW_R=" << rat_to_string(summary.red_total)
      << " SW_B=" << rat_to_string(summary.blue_total) << " positive=" << summary.positive_count
      << " delta=" << summary.bichromatic_edges << "\n";
  std::cout << out.str();
}

struct Alg1Options {
  std::string instance_path;
  std::string placement_out;
};

void run_alg1(const Alg1Options& opt) {
  Instance instance = load_instance(opt.instance_path);
  auto [placement, sw] = derandomized_assignment(instance);
  Rat guarantee = expected_random_welfare(instance.colors.n(), instance.colors.blue);
  std::ostringstream out;
  out << "SW=" << rat_to_string(sw) << " guarantee=" << rat_to_string(guarantee)
      << " ok=" << bool_name(sw >= guarantee) << "\n";
  std::cout << out.str();
  if (!opt.placement_out.empty()) {
    write_output(opt.placement_out, serialize_placement(placement));
  }
}

struct ExpectOptions {
  std::string instance_path;
  std::string prefix;
  int n = -1;
  int b = -1;
};

std::vector<std::pair<int, Color>> parse_prefix_arg(const std::string& text) {
  std::vector<std::pair<int, Color>> assigned;
  if (text.empty()) return assigned;
  std::istringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 != token.size() - 1) {
      throw Error(Errc::ParseError, "prefix token '" + token + "' is not node=R or node=B");
    }
    int node = 0;
    try {
      std::size_t used = 0;
      node = std::stoi(token.substr(0, eq), &used);
      if (used != eq) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "prefix token '" + token + "' has a bad node index");
    }
    char c = token[eq + 1];
    if (c != 'R' && c != 'B') {
      throw Error(Errc::ParseError, "prefix token '" + token + "' has a bad color");
    }
    assigned.emplace_back(node, c == 'R' ? Color::Red : Color::Blue);
  }
  return assigned;
}

void run_expect(const ExpectOptions& opt) {
  Rat value;
  if (!opt.instance_path.empty()) {
    Instance instance = load_instance(opt.instance_path);
    PrefixCondition prefix = make_prefix(instance, parse_prefix_arg(opt.prefix));
    value = conditional_expected_welfare(instance, prefix);
  } else if (opt.n >= 0 && opt.b >= 0) {
    value = expected_random_welfare(opt.n, opt.b);
  } else {
    throw Error(Errc::BadParameters, "need either --instance or both --n and --b");
  }
  std::cout << "E=" << rat_to_string(value) << "\n";
}

struct CheckOptions {
  std::string instance_path;
  std::string placement_path;
  std::string notion = "po";
  std::uint64_t cap = kDefaultEnumerationCap;
  bool csv = false;
  std::string id = "instance";
};

std::string price_csv_record(const std::string& id, Notion notion, const PriceReport& report) {
  std::ostringstream out;
  out << id << "," << notion_name(notion) << "," << rat_to_string(report.max_welfare) << ","
      << rat_to_string(report.min_welfare_among_notion) << "," << rat_to_string(report.price)
      << "\n";
  return out.str();
}

void run_check(const CheckOptions& opt) {
  if (opt.instance_path == "-" && opt.placement_path == "-") {
    throw Error(Errc::BadParameters, "at most one input may come from stdin");
  }
  Instance instance = load_instance(opt.instance_path);
  Placement placement = load_placement(opt.placement_path, instance);
  Notion notion = notion_from_name(opt.notion);
  if (opt.csv) {
    std::cout << price_csv_record(opt.id, notion, price_of(instance, notion, opt.cap));
    return;
  }
  bool optimal = is_optimal(instance, placement, notion, opt.cap);
  Rat sw = social_welfare(instance, placement);
  std::cout << "notion=" << notion_name(notion) << " optimal=" << bool_name(optimal)
            << " sw=" << rat_to_string(sw) << "\n";
}

struct PriceOptions {
  std::string instance_path;
  std::string notion = "po";
  std::uint64_t cap = kDefaultEnumerationCap;
  bool csv = false;
  std::string id = "instance";
};

void run_price(const PriceOptions& opt) {
  Instance instance = load_instance(opt.instance_path);
  Notion notion = notion_from_name(opt.notion);
  PriceReport report = price_of(instance, notion, opt.cap);
  if (opt.csv) {
    std::cout << price_csv_record(opt.id, notion, report);
    return;
  }
  std::cout << "max=" << rat_to_string(report.max_welfare)
            << " min=" << rat_to_string(report.min_welfare_among_notion)
            << " price=" << rat_to_string(report.price) << "\n";
}

struct TreePositiveOptions {
  std::string instance_path;
  std::string placement_out;
};

void run_tree_positive(const TreePositiveOptions& opt) {
  Instance instance = load_instance(opt.instance_path);
  auto [possible, witness] = tree_all_positive(instance);
  std::ostringstream out;
  out << "possible=" << bool_name(possible) << "\n";
  if (possible) out << serialize_placement(*witness);
  std::cout << out.str();
  if (possible && !opt.placement_out.empty()) {
    write_output(opt.placement_out, serialize_placement(*witness));
  }
}

struct PositiveOptions {
  std::string instance_path;
  std::string method = "construct";
  int cap = kDefaultSwapCap;
  std::string placement_out;
};

void run_positive(const PositiveOptions& opt) {
  Instance instance = load_instance(opt.instance_path);
  Placement placement;
  if (opt.method == "dfs") {
    placement = half_positive(instance);
  } else if (opt.method == "swap") {
    placement = all_positive_swap(instance, opt.cap);
  } else if (opt.method == "construct") {
    placement = all_positive_constructive(instance);
  } else {
    throw Error(Errc::BadParameters, "method must be dfs, swap, or construct");
  }
  int positives = count_positive(instance, placement);
  std::ostringstream out;
  out << "method=" << opt.method << " positive=" << positives << " n=" << instance.colors.n()
      << "\n"
      << serialize_placement(placement);
  std::cout << out.str();
  if (!opt.placement_out.empty()) {
    write_output(opt.placement_out, serialize_placement(placement));
  }
}

struct ReduceOptions {
  std::string graph_path;
  int k = 2;
  std::string output;
};

void run_reduce(const ReduceOptions& opt) {
  Topology graph = parse_topology(read_input(opt.graph_path));
  ReductionOutput reduction = clique_to_schelling(graph, opt.k);
  std::ostringstream out;
  out << serialize_instance(reduction.instance)
      << "# s = " << rat_to_string(reduction.threshold) << "\n";
  write_output(opt.output, out.str());
}

// ---------------------------------------------------------------------------
// Sweeps: batched experiments emitting one deterministic CSV report.
// Task parameters are derived up front from the master seed, so the rows
// do not depend on the number of worker threads.

std::string run_tasks(const std::vector<std::function<std::string()>>& tasks, int jobs) {
  std::vector<std::string> results(tasks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
  } else {
    // Exceptions must not escape a worker thread; each slot keeps the first
    // failure it sees and the lowest-indexed one is rethrown after the join,
    // matching what a sequential run would have reported.
    std::vector<std::exception_ptr> failures(tasks.size());
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j]() {
        for (std::size_t i = j; i < tasks.size(); i += jobs) {
          try {
            results[i] = tasks[i]();
          } catch (...) {
            failures[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& worker : workers) worker.join();
    for (const std::exception_ptr& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }
  std::string report;
  for (const std::string& rows : results) report += rows;
  return report;
}

struct SweepOptions {
  std::string mode;
  std::uint64_t seed = 1;
  int count = 200;
  int tmax = 14;
  int count_half = 200;
  int count_full = 100;
  int tmax_half = 12;
  int tmax_full = 16;
  int nmin = 4;
  int nmax = 8;
  std::string notion = "uvo";
  int jobs = 1;
  std::string output;
};

std::string sweep_alg1(const SweepOptions& opt) {
  std::ostringstream header;
  header << "# schelling-lab report v1\n"
         << "# mode=alg1 seed=" << opt.seed << " count=" << opt.count << " tmax=" << opt.tmax
         << "\n"
         << "i,family,t,m,r,b,seed,sw,expected,ok\n";
  if (opt.tmax < 3) throw Error(Errc::BadParameters, "tmax must be >= 3");
  SplitMix64 master(opt.seed);
  std::vector<std::function<std::string()>> tasks;
  for (int i = 0; i < opt.count; ++i) {
    std::uint64_t task_seed = master.next();
    tasks.push_back([i, task_seed, &opt]() {
      SplitMix64 rng(task_seed);
      GeneratorSpec spec;
      spec.family = Family::random_connected;
      spec.t = 3 + static_cast<int>(rng.next_below(opt.tmax - 2));
      std::uint64_t max_m = std::uint64_t(spec.t) * (spec.t - 1) / 2;
      spec.m = spec.t - 1 + static_cast<int>(rng.next_below(max_m - (spec.t - 1) + 1));
      spec.r = static_cast<int>(rng.next_below(spec.t + 1));
      spec.b = spec.t - spec.r;
      spec.seed = rng.next();
      Instance instance = gen_random(spec);
      auto [placement, sw] = derandomized_assignment(instance);
      Rat expected = expected_random_welfare(instance.colors.n(), instance.colors.blue);
      std::ostringstream row;
      row << i << "," << family_name(spec.family) << "," << spec.t << "," << spec.m << ","
          << spec.r << "," << spec.b << "," << task_seed << "," << rat_to_string(sw) << ","
          << rat_to_string(expected) << "," << bool_name(sw >= expected) << "\n";
      return row.str();
    });
  }
  return header.str() + run_tasks(tasks, opt.jobs);
}

std::string sweep_tree_dp(const SweepOptions& opt) {
  std::ostringstream header;
  header << "# schelling-lab report v1\n"
         << "# mode=tree-dp seed=" << opt.seed << " count=" << opt.count
         << " tmax=" << opt.tmax << "\n"
         << "i,t,r,b,seed,dp,brute,agree,witness_ok\n";
  if (opt.tmax < 2) throw Error(Errc::BadParameters, "tmax must be >= 2");
  SplitMix64 master(opt.seed);
  std::vector<std::function<std::string()>> tasks;
  for (int i = 0; i < opt.count; ++i) {
    std::uint64_t task_seed = master.next();
    tasks.push_back([i, task_seed, &opt]() {
      SplitMix64 rng(task_seed);
      GeneratorSpec spec;
      spec.family = Family::random_tree;
      spec.t = 2 + static_cast<int>(rng.next_below(opt.tmax - 1));
      // Any valid counts do here; the (r, b) grid below is exhaustive.
      spec.r = 1;
      spec.b = 1;
      spec.seed = rng.next();
      Instance seed_instance = gen_random(spec);
      const Topology& topo = seed_instance.topology;
      const int t = spec.t;

      // Ground truth for every (r, b) at once: enumerate all 3^t labelings
      // and record which occupancy profiles admit a fully positive one.
      std::vector<std::vector<char>> possible(t + 1, std::vector<char>(t + 1, 0));
      std::vector<Color> labels(t, Color::Red);
      std::function<void(int, int, int)> enumerate = [&](int node, int reds, int blues) {
        if (node == t) {
          if (reds + blues < 2) return;
          if (possible[reds][blues]) return;
          for (int v = 0; v < t; ++v) {
            if (labels[v] == Color::Empty) continue;
            bool supported = false;
            for (int w : topo.adjacency[v]) {
              if (labels[w] == labels[v]) {
                supported = true;
                break;
              }
            }
            if (!supported) return;
          }
          possible[reds][blues] = 1;
          return;
        }
        labels[node] = Color::Red;
        enumerate(node + 1, reds + 1, blues);
        labels[node] = Color::Blue;
        enumerate(node + 1, reds, blues + 1);
        labels[node] = Color::Empty;
        enumerate(node + 1, reds, blues);
      };
      enumerate(0, 0, 0);

      std::ostringstream rows;
      for (int r = 0; r <= t; ++r) {
        for (int b = 0; r + b <= t; ++b) {
          if (r + b < 2) continue;
          Instance instance = validate_instance(topo, ColorCounts{r, b});
          auto [dp, witness] = tree_all_positive(instance);
          bool brute = possible[r][b] != 0;
          bool witness_ok = true;
          if (dp) {
            witness_ok = witness && count_positive(instance, *witness) == r + b &&
                         witness->count(Color::Red) == r && witness->count(Color::Blue) == b;
          }
          rows << i << "," << t << "," << r << "," << b << "," << task_seed << ","
               << bool_name(dp) << "," << bool_name(brute) << "," << bool_name(dp == brute)
               << "," << bool_name(witness_ok) << "\n";
        }
      }
      return rows.str();
    });
  }
  return header.str() + run_tasks(tasks, opt.jobs);
}

std::string sweep_positivity(const SweepOptions& opt) {
  std::ostringstream header;
  header << "# schelling-lab report v1\n"
         << "# mode=positivity seed=" << opt.seed << " count-half=" << opt.count_half
         << " count-full=" << opt.count_full << " tmax-half=" << opt.tmax_half
         << " tmax-full=" << opt.tmax_full << "\n"
         << "part,i,t,m,r,b,seed,positive,bound,construct,ok\n";
  if (opt.tmax_half < 3) throw Error(Errc::BadParameters, "tmax-half must be >= 3");
  if (opt.tmax_full < 5) throw Error(Errc::BadParameters, "tmax-full must be >= 5");
  SplitMix64 master(opt.seed);
  std::vector<std::function<std::string()>> tasks;
  for (int i = 0; i < opt.count_half; ++i) {
    std::uint64_t task_seed = master.next();
    tasks.push_back([i, task_seed, &opt]() {
      SplitMix64 rng(task_seed);
      GeneratorSpec spec;
      spec.family = Family::random_connected;
      spec.t = 3 + static_cast<int>(rng.next_below(opt.tmax_half - 2));
      std::uint64_t max_m = std::uint64_t(spec.t) * (spec.t - 1) / 2;
      spec.m = spec.t - 1 + static_cast<int>(rng.next_below(max_m - (spec.t - 1) + 1));
      int n = 3 + static_cast<int>(rng.next_below(spec.t - 2));
      spec.r = static_cast<int>(rng.next_below(n + 1));
      spec.b = n - spec.r;
      spec.seed = rng.next();
      Instance instance = gen_random(spec);
      Placement placement = half_positive(instance);
      int positives = count_positive(instance, placement);
      int bound = (n + 1) / 2;
      std::ostringstream row;
      row << "half," << i << "," << spec.t << "," << spec.m << "," << spec.r << "," << spec.b
          << "," << task_seed << "," << positives << "," << bound << ",-,"
          << bool_name(positives >= bound) << "\n";
      return row.str();
    });
  }
  for (int i = 0; i < opt.count_full; ++i) {
    std::uint64_t task_seed = master.next();
    tasks.push_back([i, task_seed, &opt]() {
      SplitMix64 rng(task_seed);
      GeneratorSpec spec;
      spec.family = Family::random_min_degree2;
      spec.t = 5 + static_cast<int>(rng.next_below(opt.tmax_full - 4));
      // Rejection sampling for the minimum-degree floor gets hopeless near
      // m = t once t grows, so raise the sparse end with t.
      const int extra = std::max(0, (spec.t - 6) / 2);
      spec.m = spec.t + extra +
               static_cast<int>(rng.next_below(spec.t / 2 + 1 - extra));
      spec.r = 2 + static_cast<int>(rng.next_below(spec.t - 3));
      spec.b = spec.t - spec.r;
      spec.seed = rng.next();
      Instance instance = gen_random(spec);
      Placement swapped = all_positive_swap(instance);
      Placement constructed = all_positive_constructive(instance);
      int swap_pos = count_positive(instance, swapped);
      int cons_pos = count_positive(instance, constructed);
      int n = instance.colors.n();
      std::ostringstream row;
      row << "full," << i << "," << spec.t << "," << spec.m << "," << spec.r << "," << spec.b
          << "," << task_seed << "," << swap_pos << "," << n << "," << cons_pos << ","
          << bool_name(swap_pos == n && cons_pos == n) << "\n";
      return row.str();
    });
  }
  return header.str() + run_tasks(tasks, opt.jobs);
}

std::string sweep_complete_g(const SweepOptions& opt) {
  std::ostringstream header;
  header << "# schelling-lab report v1\n"
         << "# mode=complete-g nmin=" << opt.nmin << " nmax=" << opt.nmax << "\n"
         << "n,r,b,placements,all_equal_g,g\n";
  if (opt.nmin < 2 || opt.nmax < opt.nmin) {
    throw Error(Errc::BadParameters, "need 2 <= nmin <= nmax");
  }
  std::vector<std::function<std::string()>> tasks;
  for (int n = opt.nmin; n <= opt.nmax; ++n) {
    tasks.push_back([n]() {
      GeneratorSpec spec;
      spec.family = Family::complete;
      spec.t = n;
      spec.r = n / 2;
      spec.b = n - n / 2;
      Instance instance = gen_named(spec);
      Rat target = g_bound(n);
      bool all_equal = true;
      long long placements = 0;
      for_each_placement(instance, [&](const Placement& placement) {
        ++placements;
        if (social_welfare(instance, placement) != target) all_equal = false;
      });
      std::ostringstream row;
      row << n << "," << spec.r << "," << spec.b << "," << placements << ","
          << bool_name(all_equal) << "," << rat_to_string(target) << "\n";
      return row.str();
    });
  }
  return header.str() + run_tasks(tasks, opt.jobs);
}

std::string sweep_notion_floor(const SweepOptions& opt) {
  std::ostringstream header;
  header << "# schelling-lab report v1\n"
         << "# mode=notion-floor notion=" << opt.notion << " seed=" << opt.seed
         << " count=" << opt.count << " tmax=" << opt.tmax << "\n"
         << "i,t,m,r,b,seed,notion,min_sw,floor,ok\n";
  if (opt.tmax < 3) throw Error(Errc::BadParameters, "tmax must be >= 3");
  Notion notion = notion_from_name(opt.notion);
  SplitMix64 master(opt.seed);
  std::vector<std::function<std::string()>> tasks;
  for (int i = 0; i < opt.count; ++i) {
    std::uint64_t task_seed = master.next();
    tasks.push_back([i, task_seed, notion, &opt]() {
      SplitMix64 rng(task_seed);
      GeneratorSpec spec;
      spec.family = Family::random_connected;
      spec.t = 3 + static_cast<int>(rng.next_below(opt.tmax - 2));
      std::uint64_t max_m = std::uint64_t(spec.t) * (spec.t - 1) / 2;
      spec.m = spec.t - 1 + static_cast<int>(rng.next_below(max_m - (spec.t - 1) + 1));
      spec.r = static_cast<int>(rng.next_below(spec.t + 1));
      spec.b = spec.t - spec.r;
      spec.seed = rng.next();
      Instance instance = gen_random(spec);
      auto [min_sw, witness] = min_welfare_among(instance, notion);
      const int n = instance.colors.n();
      Rat floor;
      bool ok = false;
      switch (notion) {
        case Notion::UVO:
          floor = Rat(1);
          ok = min_sw >= floor;
          break;
        case Notion::GWO:
          floor = n == 3 ? Rat(1) : make_rat(n, n - 1);
          ok = min_sw >= floor;
          break;
        case Notion::PO:
          // The true bound is 1/sqrt(n); compare squares to stay rational.
          floor = make_rat(1, n);
          ok = min_sw * min_sw >= floor;
          break;
        case Notion::MaxWelfare:
          floor = Rat(0);
          ok = min_sw >= floor;
          break;
      }
      std::ostringstream row;
      row << i << "," << spec.t << "," << spec.m << "," << spec.r << "," << spec.b << ","
          << task_seed << "," << notion_name(notion) << "," << rat_to_string(min_sw) << ","
          << rat_to_string(floor) << "," << bool_name(ok) << "\n";
      return row.str();
    });
  }
  return header.str() + run_tasks(tasks, opt.jobs);
}

void run_sweep(const SweepOptions& opt) {
  std::string report;
  if (opt.mode == "alg1") {
    report = sweep_alg1(opt);
  } else if (opt.mode == "tree-dp") {
    report = sweep_tree_dp(opt);
  } else if (opt.mode == "positivity") {
    report = sweep_positivity(opt);
  } else if (opt.mode == "complete-g") {
    report = sweep_complete_g(opt);
  } else if (opt.mode == "notion-floor") {
    report = sweep_notion_floor(opt);
  } else {
    throw Error(Errc::BadParameters, "unknown sweep mode " + opt.mode);
  }
  write_output(opt.output, report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"welfare and positivity toolkit for Schelling instances"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--family", gen_opt.family,
                  "star, complete, complete_bipartite, cycle, path, fig5_gadget, "
                  "random_connected, random_tree, random_min_degree2")
      ->required();
  gen->add_option("--t", gen_opt.t, "node count");
  gen->add_option("--m", gen_opt.m, "edge count (random_connected, random_min_degree2)");
  gen->add_option("--r", gen_opt.r, "red agents (family default when omitted)");
  gen->add_option("--b", gen_opt.b, "blue agents (family default when omitted)");
  gen->add_option("--seed", gen_opt.seed, "seed for random families");
  gen->add_option("--output", gen_opt.output, "output file (default stdout)");
  gen->callback([&]() { run_gen(gen_opt); });

  EvalOptions eval_opt;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a placement");
  eval_cmd->add_option("--instance", eval_opt.instance_path, "instance file ('-' = stdin)")
      ->required();
  eval_cmd->add_option("--placement", eval_opt.placement_path, "placement file ('-' = stdin)")
      ->required();
  eval_cmd->callback([&]() { run_eval(eval_opt); });

  Alg1Options alg1_opt;
  auto* alg1 = app.add_subcommand("alg1", "derandomized assignment with its guarantee");
  alg1->add_option("--instance", alg1_opt.instance_path, "instance file ('-' = stdin)")
      ->required();
  alg1->add_option("--placement-out", alg1_opt.placement_out, "write the placement here");
  alg1->callback([&]() { run_alg1(alg1_opt); });

  ExpectOptions expect_opt;
  auto* expect = app.add_subcommand("expect", "expected welfare of a random assignment");
  expect->add_option("--instance", expect_opt.instance_path,
                     "instance file ('-' = stdin); enables --prefix");
  expect->add_option("--prefix", expect_opt.prefix, "conditioned nodes, e.g. 0=R,3=B");
  expect->add_option("--n", expect_opt.n, "agent count for the closed formula");
  expect->add_option("--b", expect_opt.b, "blue count for the closed formula");
  expect->callback([&]() { run_expect(expect_opt); });

  CheckOptions check_opt;
  auto* check = app.add_subcommand("check", "test a placement for optimality");
  check->add_option("--instance", check_opt.instance_path, "instance file ('-' = stdin)")
      ->required();
  check->add_option("--placement", check_opt.placement_path, "placement file ('-' = stdin)")
      ->required();
  check->add_option("--notion", check_opt.notion, "po, uvo, gwo, or max");
  check->add_option("--cap", check_opt.cap, "enumeration cap");
  check->add_flag("--csv", check_opt.csv, "emit the id,notion,max,min,price record");
  check->add_option("--id", check_opt.id, "instance id for the CSV record");
  check->callback([&]() { run_check(check_opt); });

  PriceOptions price_opt;
  auto* price = app.add_subcommand("price", "extreme welfare among optimal placements");
  price->add_option("--instance", price_opt.instance_path, "instance file ('-' = stdin)")
      ->required();
  price->add_option("--notion", price_opt.notion, "po, uvo, gwo, or max");
  price->add_option("--cap", price_opt.cap, "enumeration cap");
  price->add_flag("--csv", price_opt.csv, "emit the id,notion,max,min,price record");
  price->add_option("--id", price_opt.id, "instance id for the CSV record");
  price->callback([&]() { run_price(price_opt); });

  TreePositiveOptions tree_opt;
  auto* tree = app.add_subcommand("tree-positive", "decide full positivity on a tree");
  tree->add_option("--instance", tree_opt.instance_path, "instance file ('-' = stdin)")
      ->required();
  tree->add_option("--placement-out", tree_opt.placement_out, "write the witness here");
  tree->callback([&]() { run_tree_positive(tree_opt); });

  PositiveOptions positive_opt;
  auto* positive = app.add_subcommand("positive", "construct a high-positivity placement");
  positive->add_option("--instance", positive_opt.instance_path, "instance file ('-' = stdin)")
      ->required();
  positive->add_option("--method", positive_opt.method,
                       "dfs (half positive), swap, or construct (both fully positive)");
  positive->add_option("--cap", positive_opt.cap, "node cap for the swap path search");
  positive->add_option("--placement-out", positive_opt.placement_out,
                       "write the placement here");
  positive->callback([&]() { run_positive(positive_opt); });

  ReduceOptions reduce_opt;
  auto* reduce = app.add_subcommand("reduce", "clique instance from a regular graph");
  reduce->add_option("--graph", reduce_opt.graph_path,
                     "graph file, instance format with counts ignored ('-' = stdin)")
      ->required();
  reduce->add_option("--k", reduce_opt.k, "clique size")->required();
  reduce->add_option("--output", reduce_opt.output, "output file (default stdout)");
  reduce->callback([&]() { run_reduce(reduce_opt); });

  SweepOptions sweep_opt;
  auto* sweep = app.add_subcommand("sweep", "batched experiments, CSV report");
  sweep->add_option("--mode", sweep_opt.mode,
                    "alg1, tree-dp, positivity, complete-g, or notion-floor")
      ->required();
  sweep->add_option("--seed", sweep_opt.seed, "master seed");
  sweep->add_option("--count", sweep_opt.count, "instances (alg1, tree-dp, notion-floor)");
  sweep->add_option("--tmax", sweep_opt.tmax, "max node count (alg1, tree-dp, notion-floor)");
  sweep->add_option("--count-half", sweep_opt.count_half, "half-positive instances");
  sweep->add_option("--count-full", sweep_opt.count_full, "full-positivity instances");
  sweep->add_option("--tmax-half", sweep_opt.tmax_half, "max node count, half part");
  sweep->add_option("--tmax-full", sweep_opt.tmax_full, "max node count, full part");
  sweep->add_option("--nmin", sweep_opt.nmin, "smallest complete graph");
  sweep->add_option("--nmax", sweep_opt.nmax, "largest complete graph");
  sweep->add_option("--notion", sweep_opt.notion, "notion for notion-floor");
  sweep->add_option("--jobs", sweep_opt.jobs, "worker threads (rows are order-stable)");
  sweep->add_option("--output", sweep_opt.output, "output file (default stdout)");
  sweep->callback([&]() { run_sweep(sweep_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
