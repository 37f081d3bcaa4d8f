#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <limits>
#include <utility>
#include <vector>

#include "hsplit/hypergraph.hpp"
#include "hsplit/oriented.hpp"

namespace hsplit {

template <class Cap>
inline Cap cap_from(const Weight& w) {
  if constexpr (std::is_same_v<Cap, Weight>) return w;
  else return w.template convert_to<Cap>();
}

template <class Cap>
inline Weight weight_from(const Cap& c) {
  return Weight(c);
}

// Runs f with std::int64_t when every quantity up to `bound` fits with
// headroom, and with arbitrary precision otherwise.
template <class F>
inline decltype(auto) with_capacity_type(const Weight& bound, F&& f) {
  static const Weight limit = Weight(1) << 60;
  if (bound < limit) return f(std::int64_t{});
  return f(Weight{});
}

// Dinic max-flow with sets of source and sink nodes. Capacities are kept as
// a base copy so the same network can be solved for many terminal sets.
template <class Cap>
class Dinic {
 public:
  explicit Dinic(int n) : n_(n) {}

  int add_arc(int u, int v, const Cap& c) {
    int id = static_cast<int>(to_.size());
    from_.push_back(u), to_.push_back(v), base_.push_back(c);
    from_.push_back(v), to_.push_back(u), base_.push_back(Cap(0));
    built_ = false;
    return id;
  }

  int size() const { return n_; }

  // role[x]: 0 inner node, 1 source, 2 sink.
  Cap run(const std::vector<char>& role, const Cap& inf) {
    build();
    cap_ = base_;
    role_ = &role;
    Cap total = 0;
    while (bfs()) {
      it_.assign(start_.begin(), start_.end() - 1);
      for (int s = 0; s < n_; ++s) {
        if (role[s] != 1) continue;
        while (true) {
          Cap f = dfs(s, inf);
          if (f == 0) break;
          total += f;
        }
      }
    }
    return total;
  }

  // Nodes reachable from a source in the residual network of the last run.
  std::vector<char> source_side() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> q;
    for (int s = 0; s < n_; ++s)
      if ((*role_)[s] == 1) seen[s] = 1, q.push_back(s);
    for (std::size_t h = 0; h < q.size(); ++h) {
      int u = q[h];
      for (int k = start_[u]; k < start_[u + 1]; ++k) {
        int a = adj_[k];
        if (cap_[a] > 0 && !seen[to_[a]]) seen[to_[a]] = 1, q.push_back(to_[a]);
      }
    }
    return seen;
  }

  Cap flow(int arc) const { return base_[arc] - cap_[arc]; }
  int head(int arc) const { return to_[arc]; }
  int tail(int arc) const { return from_[arc]; }
  int num_arcs() const { return static_cast<int>(to_.size()); }

 private:
  void build() {
    if (built_) return;
    start_.assign(n_ + 1, 0);
    for (int u : from_) ++start_[u + 1];
    for (int i = 0; i < n_; ++i) start_[i + 1] += start_[i];
    adj_.assign(to_.size(), 0);
    std::vector<int> pos(start_.begin(), start_.end() - 1);
    for (int a = 0; a < static_cast<int>(to_.size()); ++a) adj_[pos[from_[a]]++] = a;
    built_ = true;
  }

  bool bfs() {
    level_.assign(n_, -1);
    std::vector<int> q;
    for (int s = 0; s < n_; ++s)
      if ((*role_)[s] == 1) level_[s] = 0, q.push_back(s);
    bool reached = false;
    for (std::size_t h = 0; h < q.size(); ++h) {
      int u = q[h];
      if ((*role_)[u] == 2) {
        reached = true;
        continue;
      }
      for (int k = start_[u]; k < start_[u + 1]; ++k) {
        int a = adj_[k];
        if (cap_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[u] + 1;
          q.push_back(to_[a]);
        }
      }
    }
    return reached;
  }

  Cap dfs(int u, const Cap& limit) {
    if ((*role_)[u] == 2) return limit;
    for (int& k = it_[u]; k < start_[u + 1]; ++k) {
      int a = adj_[k];
      int v = to_[a];
      if (cap_[a] > 0 && level_[v] == level_[u] + 1 && (*role_)[v] != 1) {
        Cap d = dfs(v, cap_[a] < limit ? cap_[a] : limit);
        if (d > 0) {
          cap_[a] -= d;
          cap_[a ^ 1] += d;
          return d;
        }
      }
    }
    return Cap(0);
  }

  int n_;
  bool built_ = false;
  std::vector<int> from_, to_, start_, adj_, it_, level_;
  std::vector<Cap> base_, cap_;
  const std::vector<char>* role_ = nullptr;
};

struct CutQueryResult {
  Weight value;
  VertexSet witness;
};

// The standard digraph of an undirected hypergraph: hyperedge e becomes
// e_in -> e_out with capacity w(e), members feed e_in and are fed by e_out
// with unbounded capacity. Vertex v is node v; hyperedge j has nodes
// nv + 2j and nv + 2j + 1.
template <class Cap>
class CutNetwork {
 public:
  CutNetwork(std::size_t nv, const EdgeMap& edges) : nv_(nv), net_(static_cast<int>(nv)) {
    Weight total = 0;
    for (const auto& [e, w] : edges)
      if (e.size() >= 2) total += w;
    inf_ = cap_from<Cap>(total + 1);
    int nodes = static_cast<int>(nv);
    for (const auto& [e, w] : edges) {
      if (e.size() < 2) continue;
      edges_.push_back(&e);
      nodes += 2;
    }
    net_ = Dinic<Cap>(nodes);
    int j = 0;
    for (const auto& [e, w] : edges) {
      if (e.size() < 2) continue;
      int in = static_cast<int>(nv) + 2 * j, out = in + 1;
      net_.add_arc(in, out, cap_from<Cap>(w));
      for (Vertex v : e) {
        net_.add_arc(static_cast<int>(v), in, inf_);
        net_.add_arc(out, static_cast<int>(v), inf_);
      }
      ++j;
    }
    role_.assign(nodes, 0);
  }

  // min d(Z) over S ⊆ Z ⊆ V−T with the inclusion-wise minimal optimal Z.
  std::pair<Cap, VertexSet> min_cut(const VertexSet& s, const VertexSet& t) {
    std::fill(role_.begin(), role_.end(), 0);
    for (Vertex v : s) role_[v] = 1;
    for (Vertex v : t) role_[v] = 2;
    Cap value = net_.run(role_, inf_);
    auto side = net_.source_side();
    std::vector<Vertex> z;
    for (std::size_t v = 0; v < nv_; ++v)
      if (side[v]) z.push_back(static_cast<Vertex>(v));
    return {value, VertexSet(std::move(z))};
  }

  // Decomposes the flow of the last run (one source vertex u, one sink v)
  // into hyperedge-alternating paths with multiplicities.
  struct Path {
    std::vector<Vertex> vertices;
    std::vector<VertexSet> edges;
    Cap multiplicity;
  };
  std::vector<Path> decompose(Vertex u, Vertex v) {
    int n = net_.size();
    std::vector<std::vector<int>> out(n);
    std::vector<Cap> left(net_.num_arcs(), Cap(0));
    for (int a = 0; a < net_.num_arcs(); a += 2) {
      Cap f = net_.flow(a);
      if (f > 0) {
        left[a] = f;
        out[net_.tail(a)].push_back(a);
      }
    }
    std::vector<Path> paths;
    while (true) {
      // DFS for a simple path along arcs with remaining flow.
      std::vector<int> parent(n, -2), stack{static_cast<int>(u)};
      parent[u] = -1;
      while (!stack.empty() && parent[v] == -2) {
        int x = stack.back();
        stack.pop_back();
        for (int a : out[x]) {
          int y = net_.head(a);
          if (left[a] > 0 && parent[y] == -2) {
            parent[y] = a;
            stack.push_back(y);
          }
        }
      }
      if (parent[v] == -2) break;
      std::vector<int> arcs;
      for (int x = static_cast<int>(v); x != static_cast<int>(u); x = net_.tail(parent[x])) arcs.push_back(parent[x]);
      std::reverse(arcs.begin(), arcs.end());
      Cap amount = left[arcs[0]];
      for (int a : arcs)
        if (left[a] < amount) amount = left[a];
      Path p;
      p.multiplicity = amount;
      p.vertices.push_back(u);
      for (int a : arcs) {
        left[a] -= amount;
        int y = net_.head(a);
        if (y < static_cast<int>(nv_)) p.vertices.push_back(static_cast<Vertex>(y));
        else if ((y - static_cast<int>(nv_)) % 2 == 1) p.edges.push_back(*edges_[(y - static_cast<int>(nv_)) / 2]);
      }
      paths.push_back(std::move(p));
    }
    return paths;
  }

 private:
  std::size_t nv_;
  Dinic<Cap> net_;
  Cap inf_{};
  std::vector<const VertexSet*> edges_;
  std::vector<char> role_;
};

inline void check_cut_query(const Hypergraph& h, const VertexSet& s0, const VertexSet& t0) {
  h.check_subset(s0);
  h.check_subset(t0);
  if (s0.empty() || t0.empty()) throw InputError("constrained cut needs non-empty S0 and T0");
  if (s0.intersects(t0)) throw InputError("S0 and T0 overlap");
}

inline CutQueryResult min_cut_constrained(const Hypergraph& h, const VertexSet& s0, const VertexSet& t0) {
  check_cut_query(h, s0, t0);
  return with_capacity_type(h.total_weight(), [&](auto tag) {
    using Cap = decltype(tag);
    CutNetwork<Cap> net(h.num_vertices(), h.edges());
    auto [c, z] = net.min_cut(s0, t0);
    return CutQueryResult{weight_from(c), z};
  });
}

inline Weight lambda(const Hypergraph& h, Vertex u, Vertex v) {
  if (u == v) throw InputError("lambda needs two distinct vertices");
  return min_cut_constrained(h, {u}, {v}).value;
}

// All-pairs λ by one network; entry [u][v] valid for u != v.
inline std::vector<std::vector<Weight>> all_pairs_lambda(const Hypergraph& h) {
  std::size_t n = h.num_vertices();
  std::vector<std::vector<Weight>> out(n, std::vector<Weight>(n, 0));
  with_capacity_type(h.total_weight(), [&](auto tag) {
    using Cap = decltype(tag);
    CutNetwork<Cap> net(n, h.edges());
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        Weight c = weight_from(net.min_cut({u}, {v}).first);
        out[u][v] = out[v][u] = c;
      }
    return 0;
  });
  return out;
}

inline CutQueryResult brute_force_min_cut(const Hypergraph& h, const VertexSet& s0, const VertexSet& t0) {
  if (h.num_vertices() > 20) throw InputError("brute force limited to 20 vertices");
  check_cut_query(h, s0, t0);
  VertexSet free = h.vertices() - s0 - t0;
  std::size_t k = free.size();
  std::optional<Weight> best;
  std::vector<std::size_t> minimizers;
  for (std::size_t m = 0; m < (std::size_t(1) << k); ++m) {
    auto in = mask_of(s0, h.num_vertices());
    for (std::size_t i = 0; i < k; ++i)
      if (m >> i & 1) in[free[i]] = 1;
    Weight c = cut_weight(h.edges(), in);
    if (!best || c < *best) {
      best = c;
      minimizers.assign(1, m);
    } else if (c == *best) {
      minimizers.push_back(m);
    }
  }
  std::size_t common = ~std::size_t(0);
  for (auto m : minimizers) common &= m;
  VertexSet z = s0;
  for (std::size_t i = 0; i < k; ++i)
    if (common >> i & 1) z.insert(free[i]);
  return {*best, z};
}

// Directed network of an orientation: tails feed e_in, e_out feeds the head.
inline Weight hyperarc_disjoint_paths(const OrientedHypergraph& oh, Vertex t, Vertex r) {
  if (t == r) throw InputError("path count needs distinct vertices");
  std::size_t n = oh.graph.num_vertices();
  if (t >= n || r >= n) throw InputError("unknown vertex");
  return with_capacity_type(oh.graph.total_weight(), [&](auto tag) {
    using Cap = decltype(tag);
    Cap inf = cap_from<Cap>(oh.graph.total_weight() + 1);
    int nodes = static_cast<int>(n);
    for (const auto& [e, hs] : oh.heads) nodes += 2 * static_cast<int>(hs.size());
    Dinic<Cap> net(nodes);
    int next = static_cast<int>(n);
    for (const auto& [e, hs] : oh.heads)
      for (const auto& [h, c] : hs) {
        int in = next++, out = next++;
        net.add_arc(in, out, cap_from<Cap>(c));
        for (Vertex v : e)
          if (v != h) net.add_arc(static_cast<int>(v), in, inf);
        net.add_arc(out, static_cast<int>(h), inf);
      }
    std::vector<char> role(nodes, 0);
    role[t] = 1;
    role[r] = 2;
    return weight_from(net.run(role, inf));
  });
}

}  // namespace hsplit
