#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace bettikit {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free set of vertex labels.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  Vertex max() const { return members_.back(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  VertexSet intersect(const VertexSet& other) const;
  VertexSet unite(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;

  /// Lexicographic order on the sorted member lists.
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

std::string to_string(const VertexSet& set);
std::ostream& operator<<(std::ostream& os, const VertexSet& set);

}  // namespace bettikit
