#include "bettikit/vertex_set.hpp"

#include <iterator>
#include <ostream>

namespace bettikit {

VertexSet VertexSet::intersect(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::unite(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                      std::back_inserter(out));
  return VertexSet(std::move(out));
}

std::string to_string(const VertexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i]);
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const VertexSet& set) { return os << to_string(set); }

}  // namespace bettikit
