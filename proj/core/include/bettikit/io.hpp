#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bettikit/complex.hpp"
#include "bettikit/graph.hpp"

namespace bettikit {

/// `# key: value` header comments, in file order.
using Metadata = std::vector<std::pair<std::string, std::string>>;

struct ComplexFile {
  SimplicialComplex complex;
  Metadata metadata;
};

struct GraphFile {
  Graph graph;
  Metadata metadata;
};

// Text formats: '#' lines are comments. In a complex file every other
// non-blank line is one facet (whitespace-separated labels). In a graph file
// every such line is an edge (two labels) or an isolated vertex (one label).
// Malformed lines throw BadInput naming the line number.

ComplexFile parse_complex(std::istream& in, const Limits& limits = {});
GraphFile parse_graph(std::istream& in);
ComplexFile read_complex_file(const std::filesystem::path& path, const Limits& limits = {});
GraphFile read_graph_file(const std::filesystem::path& path);

void write_complex(std::ostream& out, const SimplicialComplex& complex, const Metadata& metadata = {});
void write_graph(std::ostream& out, const Graph& graph, const Metadata& metadata = {});

}  // namespace bettikit
