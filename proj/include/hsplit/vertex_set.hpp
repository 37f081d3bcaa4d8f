#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hsplit {

using Vertex = std::uint32_t;

// Sorted, duplicate-free list of vertex indices. Lexicographic comparison of
// the sorted tuples is the canonical hyperedge order.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : v_(vs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : v_(std::move(vs)) { normalize(); }

  static VertexSet range(Vertex n) {
    VertexSet s;
    s.v_.resize(n);
    for (Vertex i = 0; i < n; ++i) s.v_[i] = i;
    return s;
  }

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  Vertex front() const { return v_.front(); }
  Vertex back() const { return v_.back(); }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  const std::vector<Vertex>& data() const { return v_; }

  bool contains(Vertex x) const { return std::binary_search(v_.begin(), v_.end(), x); }

  void insert(Vertex x) {
    auto it = std::lower_bound(v_.begin(), v_.end(), x);
    if (it == v_.end() || *it != x) v_.insert(it, x);
  }
  void erase(Vertex x) {
    auto it = std::lower_bound(v_.begin(), v_.end(), x);
    if (it != v_.end() && *it == x) v_.erase(it);
  }

  VertexSet operator|(const VertexSet& o) const {
    VertexSet r;
    r.v_.reserve(v_.size() + o.v_.size());
    std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(r.v_));
    return r;
  }
  VertexSet operator&(const VertexSet& o) const {
    VertexSet r;
    std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(r.v_));
    return r;
  }
  VertexSet operator-(const VertexSet& o) const {
    VertexSet r;
    std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(r.v_));
    return r;
  }
  VertexSet with(Vertex x) const {
    VertexSet r = *this;
    r.insert(x);
    return r;
  }
  VertexSet without(Vertex x) const {
    VertexSet r = *this;
    r.erase(x);
    return r;
  }

  bool intersects(const VertexSet& o) const {
    auto a = v_.begin(), b = o.v_.begin();
    while (a != v_.end() && b != o.v_.end()) {
      if (*a == *b) return true;
      if (*a < *b) ++a; else ++b;
    }
    return false;
  }
  bool subset_of(const VertexSet& o) const {
    return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.v_ <=> b.v_; }

 private:
  void normalize() {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }
  std::vector<Vertex> v_;
};

// Dense membership mask over [0, n).
inline std::vector<char> mask_of(const VertexSet& s, std::size_t n) {
  std::vector<char> m(n, 0);
  for (Vertex v : s)
    if (v < n) m[v] = 1;
  return m;
}

}  // namespace hsplit
