#include "schelling/io.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "schelling/errors.hpp"

namespace schelling {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

Error parse_error(std::size_t line_no, const std::string& what) {
  return Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<long long> parse_ints(const std::string& line, std::size_t count,
                                  std::size_t line_no) {
  std::istringstream in(line);
  std::vector<long long> values;
  long long v = 0;
  while (in >> v) values.push_back(v);
  std::string rest;
  if (in.bad() || (in.clear(), in >> rest)) {
    throw parse_error(line_no, "expected integers, got '" + line + "'");
  }
  if (values.size() != count) {
    throw parse_error(line_no, "expected " + std::to_string(count) +
                                   " integers, got " + std::to_string(values.size()));
  }
  return values;
}

bool is_ignorable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // blank
}

struct ParsedFile {
  int t = 0;
  int r = 0;
  int b = 0;
  std::vector<std::pair<int, int>> edges;
};

ParsedFile parse_instance_text(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.size() < 2) {
    throw parse_error(lines.size() + 1, "missing header");
  }
  auto header = parse_ints(lines[0], 3, 1);
  auto edge_header = parse_ints(lines[1], 1, 2);
  ParsedFile file;
  if (header[0] <= 0 || header[0] > 1'000'000) {
    throw parse_error(1, "node count out of range");
  }
  file.t = static_cast<int>(header[0]);
  file.r = static_cast<int>(header[1]);
  file.b = static_cast<int>(header[2]);
  long long m = edge_header[0];
  if (m < 0) throw parse_error(2, "negative edge count");
  if (lines.size() < 2 + static_cast<std::size_t>(m)) {
    throw parse_error(lines.size() + 1, "missing edge lines");
  }
  std::pair<int, int> prev{-1, -1};
  for (long long i = 0; i < m; ++i) {
    std::size_t line_no = 3 + static_cast<std::size_t>(i);
    auto pair = parse_ints(lines[2 + static_cast<std::size_t>(i)], 2, line_no);
    int u = static_cast<int>(pair[0]);
    int v = static_cast<int>(pair[1]);
    if (u < 0 || v >= file.t || u >= v) {
      throw parse_error(line_no, "edge must satisfy 0 <= u < v < t");
    }
    if (std::pair<int, int>{u, v} <= prev) {
      throw parse_error(line_no, "edges must be strictly lexicographically sorted");
    }
    prev = {u, v};
    file.edges.emplace_back(u, v);
  }
  for (std::size_t i = 2 + static_cast<std::size_t>(m); i < lines.size(); ++i) {
    if (!is_ignorable(lines[i])) {
      throw parse_error(i + 1, "unexpected content after edge list");
    }
  }
  return file;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  ParsedFile file = parse_instance_text(text);
  Topology topo = make_topology(file.t, file.edges);
  return validate_instance(topo, ColorCounts{file.r, file.b});
}

Topology parse_topology(const std::string& text) {
  ParsedFile file = parse_instance_text(text);
  return make_topology(file.t, file.edges);
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << instance.topology.node_count << ' ' << instance.colors.red << ' '
      << instance.colors.blue << '\n';
  auto edges = instance.topology.edges();
  out << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Placement parse_placement(const std::string& text, const Instance& instance) {
  auto lines = split_lines(text);
  if (lines.empty()) throw parse_error(1, "empty placement");
  const std::string& row = lines[0];
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (!is_ignorable(lines[i])) {
      throw parse_error(i + 1, "unexpected content after placement line");
    }
  }
  if (row.size() != static_cast<std::size_t>(instance.topology.node_count)) {
    throw parse_error(1, "placement length " + std::to_string(row.size()) +
                             " != node count " +
                             std::to_string(instance.topology.node_count));
  }
  Placement placement;
  placement.labels.reserve(row.size());
  for (char c : row) {
    switch (c) {
      case 'R': placement.labels.push_back(Color::Red); break;
      case 'B': placement.labels.push_back(Color::Blue); break;
      case 'E': placement.labels.push_back(Color::Empty); break;
      default:
        throw parse_error(1, std::string("invalid label character '") + c + "'");
    }
  }
  validate_placement(instance, placement);
  return placement;
}

std::string serialize_placement(const Placement& placement) {
  std::string out;
  out.reserve(placement.labels.size() + 1);
  for (Color c : placement.labels) {
    out.push_back(c == Color::Red ? 'R' : c == Color::Blue ? 'B' : 'E');
  }
  out.push_back('\n');
  return out;
}

}  // namespace schelling
