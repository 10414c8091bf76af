#include "bettikit/complex.hpp"

#include <algorithm>

#include "bettikit/error.hpp"

namespace bettikit {

SimplicialComplex SimplicialComplex::generated_by(std::vector<VertexSet> generators) {
  std::erase_if(generators, [](const VertexSet& f) { return f.empty(); });
  // Larger sets first, so a set is only ever absorbed by one already kept.
  std::sort(generators.begin(), generators.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  SimplicialComplex out;
  for (auto& candidate : generators) {
    bool absorbed = std::any_of(out.facets_.begin(), out.facets_.end(),
                                [&](const VertexSet& kept) { return candidate.is_subset_of(kept); });
    if (!absorbed) out.facets_.push_back(std::move(candidate));
  }
  std::sort(out.facets_.begin(), out.facets_.end());

  std::vector<Vertex> all;
  for (const auto& f : out.facets_) all.insert(all.end(), f.begin(), f.end());
  out.vertices_ = VertexSet(std::move(all));
  return out;
}

int SimplicialComplex::dimension() const noexcept {
  std::size_t largest = 0;
  for (const auto& f : facets_) largest = std::max(largest, f.size());
  return static_cast<int>(largest) - 1;
}

bool SimplicialComplex::contains_face(const VertexSet& face) const {
  if (face.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& f) { return face.is_subset_of(f); });
}

bool SimplicialComplex::is_facet(const VertexSet& face) const {
  return std::binary_search(facets_.begin(), facets_.end(), face);
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const VertexSet& f) { return f.size() == facets_.front().size(); });
}

SimplicialComplex complex_from_facets(std::vector<VertexSet> facets, const Limits& limits) {
  if (facets.empty()) throw Error(Errc::EmptyInput, "facet list is empty");
  auto complex = SimplicialComplex::generated_by(std::move(facets));
  if (complex.num_vertices() > limits.vertex_cap) {
    throw Error(Errc::VertexCapExceeded, std::to_string(complex.num_vertices()) + " vertices exceed cap " +
                                             std::to_string(limits.vertex_cap));
  }
  return complex;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, const VertexSet& subset) {
  std::vector<VertexSet> restricted;
  restricted.reserve(complex.facets().size());
  for (const auto& f : complex.facets()) restricted.push_back(f.intersect(subset));
  return SimplicialComplex::generated_by(std::move(restricted));
}

}  // namespace bettikit
