#include "bettikit/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "bettikit/error.hpp"

namespace bettikit {
namespace {

std::string trim(const std::string& s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

void read_metadata(const std::string& comment, Metadata& metadata) {
  std::string body = trim(comment.substr(1));
  auto colon = body.find(':');
  if (colon == std::string::npos || colon == 0) return;
  std::string key = trim(body.substr(0, colon));
  if (key.find_first_of(" \t") != std::string::npos) return;
  metadata.emplace_back(key, trim(body.substr(colon + 1)));
}

std::vector<Vertex> parse_labels(const std::string& line, std::size_t line_no) {
  std::vector<Vertex> labels;
  std::istringstream tokens(line);
  std::string token;
  while (tokens >> token) {
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(Errc::BadInput, "line " + std::to_string(line_no) + ": '" + token + "' is not a vertex label");
    }
    labels.push_back(v);
  }
  return labels;
}

template <typename OnLine>
Metadata scan(std::istream& in, OnLine on_line) {
  Metadata metadata;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      read_metadata(body, metadata);
      continue;
    }
    on_line(parse_labels(body, line_no), line_no);
  }
  return metadata;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot open '" + path.string() + "'");
  return in;
}

void write_metadata(std::ostream& out, const Metadata& metadata) {
  for (const auto& [key, value] : metadata) out << "# " << key << ": " << value << '\n';
}

}  // namespace

ComplexFile parse_complex(std::istream& in, const Limits& limits) {
  std::vector<VertexSet> facets;
  Metadata metadata = scan(in, [&](std::vector<Vertex> labels, std::size_t line_no) {
    VertexSet facet(labels);
    if (facet.size() != labels.size()) {
      throw Error(Errc::BadInput, "line " + std::to_string(line_no) + ": repeated vertex in facet");
    }
    facets.push_back(std::move(facet));
  });
  return {complex_from_facets(std::move(facets), limits), std::move(metadata)};
}

GraphFile parse_graph(std::istream& in) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  Metadata metadata = scan(in, [&](std::vector<Vertex> labels, std::size_t line_no) {
    if (labels.size() == 1) {
      vertices.push_back(labels[0]);
    } else if (labels.size() == 2 && labels[0] != labels[1]) {
      vertices.insert(vertices.end(), labels.begin(), labels.end());
      edges.emplace_back(labels[0], labels[1]);
    } else {
      throw Error(Errc::BadInput, "line " + std::to_string(line_no) + ": expected an edge or a single vertex");
    }
  });
  return {Graph(VertexSet(std::move(vertices)), edges), std::move(metadata)};
}

ComplexFile read_complex_file(const std::filesystem::path& path, const Limits& limits) {
  auto in = open(path);
  return parse_complex(in, limits);
}

GraphFile read_graph_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_graph(in);
}

void write_complex(std::ostream& out, const SimplicialComplex& complex, const Metadata& metadata) {
  write_metadata(out, metadata);
  for (const auto& facet : complex.facets()) {
    for (std::size_t i = 0; i < facet.size(); ++i) out << (i ? " " : "") << facet[i];
    out << '\n';
  }
}

void write_graph(std::ostream& out, const Graph& graph, const Metadata& metadata) {
  write_metadata(out, metadata);
  std::set<Vertex> covered;
  for (const auto& [u, v] : graph.edges()) {
    out << u << ' ' << v << '\n';
    covered.insert(u);
    covered.insert(v);
  }
  for (Vertex v : graph.vertices()) {
    if (!covered.contains(v)) out << v << '\n';
  }
}

}  // namespace bettikit
