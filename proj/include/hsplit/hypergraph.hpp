#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hsplit/error.hpp"
#include "hsplit/vertex_set.hpp"
#include "hsplit/weight.hpp"

namespace hsplit {

// Hyperedges keyed by their canonical vertex set; parallel copies are
// aggregated into one weight.
using EdgeMap = std::map<VertexSet, Weight>;

inline void edge_add(EdgeMap& m, const VertexSet& e, const Weight& w) {
  if (w == 0) return;
  auto [it, fresh] = m.try_emplace(e, w);
  if (!fresh) it->second += w;
}

inline void edge_sub(EdgeMap& m, const VertexSet& e, const Weight& w) {
  if (w == 0) return;
  auto it = m.find(e);
  if (it == m.end() || it->second < w) throw InputError("not enough weight on hyperedge");
  it->second -= w;
  if (it->second == 0) m.erase(it);
}

inline void edges_add(EdgeMap& m, const EdgeMap& o) {
  for (const auto& [e, w] : o) edge_add(m, e, w);
}

inline Weight edges_total(const EdgeMap& m) {
  Weight t = 0;
  for (const auto& kv : m) t += kv.second;
  return t;
}

// d(X) over an edge map, X given as a mask large enough for every vertex used.
inline Weight cut_weight(const EdgeMap& m, const std::vector<char>& in) {
  Weight t = 0;
  for (const auto& [e, w] : m) {
    bool a = false, b = false;
    for (Vertex v : e) (in[v] ? a : b) = true;
    if (a && b) t += w;
  }
  return t;
}

// b(X): weight of hyperedges meeting X.
inline Weight cover_weight(const EdgeMap& m, const std::vector<char>& in) {
  Weight t = 0;
  for (const auto& [e, w] : m)
    for (Vertex v : e)
      if (in[v]) {
        t += w;
        break;
      }
  return t;
}

inline std::size_t span_of(const EdgeMap& m, const VertexSet& x) {
  std::size_t n = x.empty() ? 0 : x.back() + 1;
  for (const auto& kv : m) n = std::max<std::size_t>(n, kv.first.back() + 1);
  return n;
}

inline Weight cut_weight(const EdgeMap& m, const VertexSet& x) {
  return cut_weight(m, mask_of(x, span_of(m, x)));
}
inline Weight cover_weight(const EdgeMap& m, const VertexSet& x) {
  return cover_weight(m, mask_of(x, span_of(m, x)));
}

// Vertices touched by at least one hyperedge.
inline VertexSet support(const EdgeMap& m) {
  std::vector<Vertex> vs;
  for (const auto& kv : m) vs.insert(vs.end(), kv.first.begin(), kv.first.end());
  return VertexSet(std::move(vs));
}

class Hypergraph {
 public:
  Hypergraph() : labels_(std::make_shared<Labels>()) {}

  explicit Hypergraph(std::vector<std::string> names) {
    auto l = std::make_shared<Labels>();
    for (auto& s : names) {
      if (s.empty()) throw InputError("empty vertex label");
      if (!l->index.emplace(s, static_cast<Vertex>(l->names.size())).second)
        throw InputError("duplicate vertex label '" + s + "'");
      l->names.push_back(std::move(s));
    }
    labels_ = std::move(l);
  }

  std::size_t num_vertices() const { return labels_->names.size(); }
  VertexSet vertices() const { return VertexSet::range(static_cast<Vertex>(num_vertices())); }
  const std::vector<std::string>& labels() const { return labels_->names; }
  const std::string& label(Vertex v) const { return labels_->names.at(v); }

  std::optional<Vertex> find(std::string_view name) const {
    auto it = labels_->index.find(std::string(name));
    if (it == labels_->index.end()) return std::nullopt;
    return it->second;
  }
  Vertex vertex(std::string_view name) const {
    auto v = find(name);
    if (!v) throw InputError("unknown vertex '" + std::string(name) + "'");
    return *v;
  }
  VertexSet vertex_set(const std::vector<std::string>& names) const {
    std::vector<Vertex> vs;
    for (const auto& s : names) vs.push_back(vertex(s));
    return VertexSet(std::move(vs));
  }

  const EdgeMap& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  Weight weight(const VertexSet& e) const {
    auto it = edges_.find(e);
    return it == edges_.end() ? Weight(0) : it->second;
  }
  bool has_edge(const VertexSet& e) const { return edges_.count(e) != 0; }
  Weight total_weight() const { return edges_total(edges_); }

  void check_subset(const VertexSet& x) const {
    if (!x.empty() && x.back() >= num_vertices()) throw InputError("vertex index out of range");
  }

  void add(const VertexSet& e, const Weight& w) {
    if (e.empty()) throw InputError("empty hyperedge");
    if (w < 0) throw InputError("negative weight");
    check_subset(e);
    edge_add(edges_, e, w);
  }
  void subtract(const VertexSet& e, const Weight& w) {
    if (w < 0) throw InputError("negative weight");
    if (weight(e) < w) throw InputError("hyperedge " + describe(e) + " has weight below " + w.str());
    edge_sub(edges_, e, w);
  }

  Hypergraph with_edges(EdgeMap m) const {
    Hypergraph h = empty_copy();
    for (auto& [e, w] : m) h.add(e, w);
    return h;
  }
  Hypergraph empty_copy() const {
    Hypergraph h;
    h.labels_ = labels_;
    return h;
  }
  // Appends a fresh vertex; returns the new hypergraph and the index.
  std::pair<Hypergraph, Vertex> with_vertex(const std::string& name) const {
    std::vector<std::string> names = labels_->names;
    names.push_back(name);
    Hypergraph h(std::move(names));
    h.edges_ = edges_;
    return {h, static_cast<Vertex>(num_vertices())};
  }

  std::string describe(const VertexSet& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += s[i] < num_vertices() ? label(s[i]) : "?" + std::to_string(s[i]);
    }
    return out + "}";
  }

  bool same_vertices(const Hypergraph& o) const {
    return labels_ == o.labels_ || labels_->names == o.labels_->names;
  }
  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.same_vertices(b) && a.edges_ == b.edges_;
  }

 private:
  struct Labels {
    std::vector<std::string> names;
    std::unordered_map<std::string, Vertex> index;
  };
  std::shared_ptr<const Labels> labels_;
  EdgeMap edges_;
};

inline Weight cut_value(const Hypergraph& h, const VertexSet& x) {
  h.check_subset(x);
  return cut_weight(h.edges(), mask_of(x, h.num_vertices()));
}

inline Weight coverage_value(const Hypergraph& h, const VertexSet& x) {
  h.check_subset(x);
  return cover_weight(h.edges(), mask_of(x, h.num_vertices()));
}

inline Weight degree(const Hypergraph& h, Vertex v) {
  if (v >= h.num_vertices()) throw InputError("unknown vertex");
  Weight t = 0;
  for (const auto& [e, w] : h.edges())
    if (e.contains(v)) t += w;
  return t;
}

inline Hypergraph operator+(const Hypergraph& a, const Hypergraph& b) {
  if (!a.same_vertices(b)) throw InputError("hypergraph sum over different vertex sets");
  Hypergraph r = a;
  for (const auto& [e, w] : b.edges()) r.add(e, w);
  return r;
}

inline void check_amount(const Weight& a) {
  if (a < 1) throw InputError("operation amount must be positive");
}

inline Hypergraph merge(const Hypergraph& h, const VertexSet& e, const VertexSet& f, const Weight& a) {
  if (e == f) throw InputError("merge of a hyperedge with itself");
  check_amount(a);
  if (!h.has_edge(e) || !h.has_edge(f)) throw InputError("merge of a missing hyperedge");
  Hypergraph r = h;
  r.subtract(e, a);
  r.subtract(f, a);
  r.add(e | f, a);
  return r;
}

inline Hypergraph reduce(const Hypergraph& h, const VertexSet& e, const Weight& a) {
  check_amount(a);
  if (!h.has_edge(e)) throw InputError("reduce of a missing hyperedge");
  Hypergraph r = h;
  r.subtract(e, a);
  return r;
}

inline Hypergraph h_merge_at(const Hypergraph& h, Vertex s, const VertexSet& e, const VertexSet& f,
                             const Weight& a) {
  if ((e & f) != VertexSet{s})
    throw InputError("h-merge needs hyperedges meeting exactly at vertex " + h.describe({s}));
  if (e.size() < 2 || f.size() < 2) throw InputError("h-merge needs hyperedges crossing the vertex");
  return merge(h, e, f, a);
}

inline Hypergraph h_trim_at(const Hypergraph& h, Vertex s, const VertexSet& e, const Weight& a) {
  if (!e.contains(s)) throw InputError("h-trim of a hyperedge avoiding the vertex");
  if (e.size() < 2) throw InputError("h-trim of a singleton would create an empty hyperedge");
  check_amount(a);
  Hypergraph r = h;
  r.subtract(e, a);
  r.add(e.without(s), a);
  return r;
}

inline Hypergraph restrict(const Hypergraph& h, const VertexSet& u) {
  h.check_subset(u);
  std::vector<std::string> names;
  std::vector<Vertex> remap(h.num_vertices(), static_cast<Vertex>(-1));
  for (Vertex v : u) {
    remap[v] = static_cast<Vertex>(names.size());
    names.push_back(h.label(v));
  }
  Hypergraph r(std::move(names));
  for (const auto& [e, w] : h.edges()) {
    std::vector<Vertex> p;
    for (Vertex v : e)
      if (remap[v] != static_cast<Vertex>(-1)) p.push_back(remap[v]);
    if (!p.empty()) r.add(VertexSet(std::move(p)), w);
  }
  return r;
}

inline Hypergraph delete_vertex(const Hypergraph& h, Vertex v) {
  if (degree(h, v) != 0) throw InputError("cannot delete covered vertex " + h.label(v));
  return restrict(h, h.vertices().without(v));
}

// Equality by labels, independent of vertex declaration order.
inline bool equal_labeled(const Hypergraph& a, const Hypergraph& b) {
  if (a.num_vertices() != b.num_vertices()) return false;
  std::vector<Vertex> to_b(a.num_vertices());
  for (Vertex v = 0; v < a.num_vertices(); ++v) {
    auto w = b.find(a.label(v));
    if (!w) return false;
    to_b[v] = *w;
  }
  EdgeMap mapped;
  for (const auto& [e, w] : a.edges()) {
    std::vector<Vertex> p;
    for (Vertex v : e) p.push_back(to_b[v]);
    edge_add(mapped, VertexSet(std::move(p)), w);
  }
  return mapped == b.edges();
}

}  // namespace hsplit
