#include "permgraph/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

namespace permgraph {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Non-empty lines with comments stripped.
std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::size_t parse_size(std::string_view s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    fail(ErrorCode::parse, "expected a vertex count, got '" + std::string(s) + "'");
  if (s.size() > 3) fail(ErrorCode::capacity, "vertex count '" + std::string(s) + "' too large");
  return std::stoul(std::string(s));
}

std::uint32_t parse_row(std::string_view line, std::size_t n, std::size_t row_index) {
  const std::string where = "row " + std::to_string(row_index + 1);
  if (line.size() > 2 && line[0] == '0' && (line[1] == 'x' || line[1] == 'X')) {
    std::uint64_t value = 0;
    for (char c : line.substr(2)) {
      int digit;
      if (c >= '0' && c <= '9') digit = c - '0';
      else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
      else fail(ErrorCode::parse, where + ": bad hex digit '" + std::string(1, c) + "'");
      value = value * 16 + static_cast<std::uint64_t>(digit);
      if (value >> 32) fail(ErrorCode::dimension, where + ": hex row exceeds 32 bits");
    }
    if (n < 32 && (value >> n)) fail(ErrorCode::dimension, where + ": hex row has bits beyond column n");
    return static_cast<std::uint32_t>(value);
  }
  std::string compact;
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.size() != n)
    fail(ErrorCode::dimension, where + ": expected " + std::to_string(n) + " entries, got " +
                                   std::to_string(compact.size()));
  std::uint32_t mask = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (compact[j] == '1') mask |= std::uint32_t{1} << j;
    else if (compact[j] != '0') fail(ErrorCode::parse, where + ": entries must be 0 or 1");
  }
  return mask;
}

std::vector<DirectedGraph> parse_lines(const std::vector<std::string_view>& lines) {
  std::vector<DirectedGraph> graphs;
  std::size_t pos = 0;
  while (pos < lines.size()) {
    const std::size_t n = parse_size(lines[pos++]);
    require(n >= 1 && n <= DirectedGraph::kMaxVertices, ErrorCode::capacity,
            "graph size must lie in [1, 32]");
    if (pos + n > lines.size())
      fail(ErrorCode::parse, "graph declares " + std::to_string(n) + " rows but the input ends early");
    std::vector<std::uint32_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = parse_row(lines[pos++], n, i);
    graphs.push_back(DirectedGraph::from_rows(rows));
  }
  return graphs;
}

std::vector<std::uint32_t> parse_number_list(std::string_view s, const std::string& context) {
  std::vector<std::uint32_t> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token.size() > 3) fail(ErrorCode::parse, context + ": element '" + token + "' too large");
    const unsigned long v = std::stoul(token);
    if (v == 0) fail(ErrorCode::parse, context + ": elements are 1-indexed");
    out.push_back(static_cast<std::uint32_t>(v - 1));
    token.clear();
  };
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) token.push_back(c);
    else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') flush();
    else fail(ErrorCode::parse, context + ": unexpected character '" + std::string(1, c) + "'");
  }
  flush();
  return out;
}

/// Splits "(..)(..)" or "{..}{..}" groups.
std::vector<std::string_view> bracket_groups(std::string_view s, char open, char close,
                                             const std::string& context) {
  std::vector<std::string_view> groups;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (c != open) fail(ErrorCode::parse, context + ": expected '" + std::string(1, open) + "'");
    auto end = s.find(close, i + 1);
    if (end == std::string_view::npos) fail(ErrorCode::parse, context + ": unbalanced brackets");
    groups.push_back(s.substr(i + 1, end - i - 1));
    i = end + 1;
  }
  return groups;
}

std::vector<std::uint32_t> parse_group(std::string_view group, const std::string& context) {
  group = trim(group);
  const bool separated = group.find_first_of(" \t,") != std::string_view::npos;
  if (separated || group.size() <= 1) return parse_number_list(group, context);
  std::vector<std::uint32_t> out;
  for (char c : group) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
      fail(ErrorCode::parse, context + ": unexpected character '" + std::string(1, c) + "'");
    out.push_back(static_cast<std::uint32_t>(c - '1'));
  }
  return out;
}

}  // namespace

DirectedGraph parse_graph(std::string_view text) {
  auto graphs = parse_graphs(text);
  require(graphs.size() == 1, ErrorCode::parse,
          "expected exactly one graph, found " + std::to_string(graphs.size()));
  return graphs.front();
}

std::vector<DirectedGraph> parse_graphs(std::string_view text) { return parse_lines(content_lines(text)); }

DirectedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot read graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::vector<std::string> graph_row_strings(const DirectedGraph& g) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::string row(g.size(), '0');
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g.has_edge(i, j)) row[j] = '1';
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_graph(const DirectedGraph& g) {
  std::string out = std::to_string(g.size()) + "\n";
  for (const auto& row : graph_row_strings(g)) out += row + "\n";
  return out;
}

std::string format_graph_hex(const DirectedGraph& g) {
  static const char* digits = "0123456789abcdef";
  std::string out = std::to_string(g.size()) + "\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::uint32_t r = g.row(i);
    std::string word;
    do {
      word.insert(word.begin(), digits[r & 0xF]);
      r >>= 4;
    } while (r);
    out += "0x" + word + "\n";
  }
  return out;
}

Permutation parse_permutation(std::string_view text, std::size_t n) {
  text = trim(text);
  const std::string context = "permutation '" + std::string(text) + "'";
  if (text.empty()) fail(ErrorCode::parse, "empty permutation");
  if (text.front() == '(') {
    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t largest = 0;
    for (auto group : bracket_groups(text, '(', ')', context)) {
      auto cycle = parse_group(group, context);
      if (cycle.empty()) fail(ErrorCode::parse, context + ": empty cycle");
      for (auto v : cycle) largest = std::max<std::size_t>(largest, v + 1);
      cycles.push_back(std::move(cycle));
    }
    if (n == 0) n = largest;
    require(largest <= n, ErrorCode::dimension, context + ": element exceeds n");
    return Permutation::from_cycles(n, cycles);
  }
  auto images = parse_number_list(text, context);
  if (n != 0)
    require(images.size() == n, ErrorCode::dimension, context + ": expected " + std::to_string(n) + " images");
  for (auto v : images)
    require(v < images.size(), ErrorCode::parse, context + ": image exceeds n");
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& sigma) {
  std::string out;
  for (const auto& cycle : sigma.cycles()) {
    out += "(";
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += " ";
      out += std::to_string(cycle[k] + 1);
    }
    out += ")";
  }
  return out;
}

std::string format_one_line(const Permutation& sigma) {
  std::string out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(sigma(i) + 1);
  }
  return out;
}

Partition parse_partition(std::string_view text, std::size_t n) {
  text = trim(text);
  const std::string context = "partition '" + std::string(text) + "'";
  std::vector<std::vector<std::uint32_t>> blocks;
  std::size_t largest = 0;
  for (auto group : bracket_groups(text, '{', '}', context)) {
    auto block = parse_group(group, context);
    for (auto v : block) largest = std::max<std::size_t>(largest, v + 1);
    blocks.push_back(std::move(block));
  }
  if (n == 0) n = largest;
  require(largest <= n, ErrorCode::dimension, context + ": element exceeds n");
  return Partition::from_blocks(n, blocks);
}

std::string format_partition(const Partition& pi) {
  std::string out;
  for (const auto& block : pi.blocks()) {
    out += "{";
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) out += " ";
      out += std::to_string(block[k] + 1);
    }
    out += "}";
  }
  return out;
}

}  // namespace permgraph
