#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permgraph/graphs.hpp"

namespace permgraph {

// Graph text format: a line holding n, followed by n rows. A row is either n
// characters from {0,1} (character j is edge i -> j) or a hex word "0x..."
// whose bit j is edge i -> j. Blank lines and '#' comments are ignored.
// Several graphs may follow each other in one document.

DirectedGraph parse_graph(std::string_view text);
std::vector<DirectedGraph> parse_graphs(std::string_view text);
DirectedGraph read_graph_file(const std::string& path);

std::string format_graph(const DirectedGraph& g);
std::string format_graph_hex(const DirectedGraph& g);
std::vector<std::string> graph_row_strings(const DirectedGraph& g);

/// "2 3 1" (1-indexed images) or cycle notation "(1 2 3)(4)". Inside a
/// cycle, elements without separators are read as single digits, so
/// "(1234)" works for n <= 9. With n == 0 the size is inferred.
Permutation parse_permutation(std::string_view text, std::size_t n = 0);

/// Cycle notation including fixed points, e.g. "(1 2 3)(4)".
std::string format_cycles(const Permutation& sigma);
std::string format_one_line(const Permutation& sigma);

/// "{1 2}{3}" or "{1,2},{3}"; every element of 1..n must appear once.
Partition parse_partition(std::string_view text, std::size_t n = 0);
std::string format_partition(const Partition& pi);

}  // namespace permgraph
