#pragma once

// Random instance generators and brute-force referees shared by the unit
// tests and the acceptance binary.

#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "hsplit/hsplit.hpp"

namespace hsplit {

// Readable gtest failure messages.
inline void PrintTo(const VertexSet& s, std::ostream* os) {
  *os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) *os << (i ? "," : "") << s[i];
  *os << "}";
}

}  // namespace hsplit

namespace hsplit::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::vector<std::string> names(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline VertexSet random_subset(Rng& rng, std::size_t n, std::size_t size) {
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  return VertexSet(all);
}

inline VertexSet random_any_subset(Rng& rng, const VertexSet& ground) {
  std::vector<Vertex> out;
  for (Vertex v : ground)
    if (rng() & 1) out.push_back(v);
  return VertexSet(out);
}

struct Shape {
  int n_min = 2, n_max = 10;
  int m_min = 0, m_max = 14;
  int w_max = 5;
  int size_max = 5;
  int singleton_pct = 10;  // chance a hyperedge is a singleton
  int graph_pct = 0;       // chance a non-singleton hyperedge has size two
};

inline Hypergraph random_hypergraph(Rng& rng, const Shape& sh) {
  int n = uniform(rng, sh.n_min, sh.n_max);
  Hypergraph g(names(n));
  int m = uniform(rng, sh.m_min, sh.m_max);
  for (int i = 0; i < m; ++i) {
    int size;
    if (uniform(rng, 1, 100) <= sh.singleton_pct) size = 1;
    else if (n >= 2 && uniform(rng, 1, 100) <= sh.graph_pct) size = 2;
    else size = uniform(rng, std::min(2, n), std::min(n, sh.size_max));
    g.add(random_subset(rng, n, size), uniform(rng, 1, sh.w_max));
  }
  return g;
}

// Random hyperedges over [0, n) cut down to `ground`; empty traces dropped.
inline EdgeMap random_edges_within(Rng& rng, int n, const VertexSet& ground, int m_max, int w_max, int size_max) {
  EdgeMap out;
  Hypergraph g = random_hypergraph(rng, {n, n, 0, m_max, w_max, size_max, 20, 20});
  for (const auto& [e, w] : g.edges())
    if (!(e & ground).empty()) edge_add(out, e & ground, w);
  return out;
}

// ---- enumeration ----

inline std::vector<VertexSet> all_subsets(const VertexSet& ground) {
  std::vector<VertexSet> out;
  for (std::size_t m = 0; m < (std::size_t(1) << ground.size()); ++m) {
    std::vector<Vertex> xs;
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (m >> i & 1) xs.push_back(ground[i]);
    out.emplace_back(xs);
  }
  return out;
}

inline std::vector<VertexSet> between(const VertexSet& s, const VertexSet& t, const VertexSet& ground) {
  std::vector<VertexSet> out;
  for (const auto& x : all_subsets(ground - s - t)) out.push_back(x | s);
  return out;
}

using SetFn = std::function<ExtInt(const VertexSet&)>;

inline Weight cut_of(const EdgeMap& m, const VertexSet& x, std::size_t universe) {
  return cut_weight(m, mask_of(x, universe + 2));
}
inline Weight cover_of(const EdgeMap& m, const VertexSet& x, std::size_t universe) {
  return cover_weight(m, mask_of(x, universe + 2));
}

// Explicit R(X) − d_J(X) on a ground set.
inline SetFn requirement_fn(const RequirementFunction& r, const VertexSet& ground, const EdgeMap& j,
                            std::size_t universe) {
  return [=](const VertexSet& x) { return ExtInt(r.R(x, ground)) - ExtInt(cut_of(j, x, universe)); };
}

// Explicit value of the function behind a chain of shifts and contractions.
inline SetFn explicit_fn(const SetFunctionOracle& p) {
  if (auto s = dynamic_cast<const ShiftedOracle*>(&p)) {
    SetFn root = explicit_fn(*s->root());
    EdgeMap shift = s->shift();
    VertexSet zc = s->contracted();
    std::size_t u = p.universe();
    return [root, shift, zc, u](const VertexSet& x) {
      ExtInt best = ExtInt::neg_inf();
      for (const auto& r : all_subsets(zc)) {
        VertexSet y = x | r;
        best = max(best, root(y) - ExtInt(cut_of(shift, y, u)));
      }
      return best;
    };
  }
  if (auto r = dynamic_cast<const RequirementOracle*>(&p)) {
    auto* rr = r;
    return [rr](const VertexSet& x) { return rr->value(x); };
  }
  if (auto a = dynamic_cast<const AppendixAOracle*>(&p)) {
    auto* aa = a;
    return [aa](const VertexSet& x) { return aa->value(x); };
  }
  throw std::logic_error("unknown oracle type");
}

// max over S ⊆ Z ⊆ ground − T of p(Z) − d_{g0}(Z).
inline ExtInt brute_strong(const SetFn& p, const VertexSet& ground, const EdgeMap& g0, const VertexSet& s,
                           const VertexSet& t, std::size_t universe) {
  ExtInt best = ExtInt::neg_inf();
  for (const auto& z : between(s, t, ground)) best = max(best, p(z) - ExtInt(cut_of(g0, z, universe)));
  return best;
}

inline ExtInt brute_weak(const SetFn& p, const VertexSet& ground, const EdgeMap& g, const VertexSet& s,
                         const VertexSet& t, std::size_t universe) {
  ExtInt best = ExtInt::neg_inf();
  for (const auto& z : between(s, t, ground)) best = max(best, p(z) - ExtInt(cover_of(g, z, universe)));
  return best;
}

inline Weight brute_lambda(const Hypergraph& g, Vertex u, Vertex v) { return brute_force_min_cut(g, {u}, {v}).value; }

// Maximal sets X with b(X) = p(X), by enumeration.
inline std::vector<VertexSet> brute_maximal_tight(const SetFn& p, const VertexSet& ground, const EdgeMap& h,
                                                  std::size_t universe) {
  std::vector<VertexSet> tight;
  for (const auto& x : all_subsets(ground))
    if (!x.empty() && p(x) == ExtInt(cover_of(h, x, universe))) tight.push_back(x);
  std::vector<VertexSet> out;
  for (const auto& x : tight) {
    bool maximal = true;
    for (const auto& y : tight)
      if (!(x == y) && x.subset_of(y)) maximal = false;
    if (maximal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Directed min cut for a t→r path count: over X ∋ t, r ∉ X, the copies with
// head outside X and a tail inside X.
inline Weight brute_directed_cut(const OrientedHypergraph& oh, Vertex t, Vertex r) {
  std::size_t n = oh.graph.num_vertices();
  std::optional<Weight> best;
  for (const auto& x : between({t}, {r}, oh.graph.vertices())) {
    auto in = mask_of(x, n);
    Weight c = 0;
    for (const auto& [e, hs] : oh.heads)
      for (const auto& [h, k] : hs) {
        if (in[h]) continue;
        bool tail_in = false;
        for (Vertex v : e)
          if (v != h && in[v]) tail_in = true;
        if (tail_in) c += k;
      }
    if (!best || c < *best) best = c;
  }
  return *best;
}

// A weak cover instance: hyperedges through s minus s, J the rest, r = λ_G.
struct CoverInstance {
  Hypergraph g;
  Vertex s;
  EdgeMap h;
  OraclePtr p;
  SetFn value;
  VertexSet ground;
};

inline CoverInstance splitting_instance(const Hypergraph& g, Vertex s) {
  CoverInstance c{g, s, {}, nullptr, nullptr, g.vertices().without(s)};
  EdgeMap j;
  for (const auto& [e, w] : g.edges()) {
    if (!e.contains(s)) edge_add(j, e, w);
    else if (e.size() > 1) edge_add(c.h, e.without(s), w);
  }
  auto o = std::make_shared<RequirementOracle>(g.num_vertices(), c.ground, j, lambda_requirements(g, s));
  c.p = o;
  c.value = [o](const VertexSet& x) { return o->value(x); };
  return c;
}

// Random requirement, random J and a random hypergraph padded with
// singletons until it weakly covers R − d_J.
inline CoverInstance random_cover_instance(Rng& rng, int n, int m, int w_max, int r_max) {
  CoverInstance c{Hypergraph(names(n)), 0, {}, nullptr, nullptr, VertexSet::range(n)};
  RequirementFunction r(n);
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v)
      if (uniform(rng, 0, 2)) r.set(u, v, uniform(rng, 0, r_max));
  EdgeMap j;
  for (int i = 0, mj = uniform(rng, 0, n); i < mj; ++i)
    edge_add(j, random_subset(rng, n, uniform(rng, 2, std::min(n, 3))), uniform(rng, 1, 2));
  for (int i = 0; i < m; ++i) edge_add(c.h, random_subset(rng, n, uniform(rng, 1, std::min(n, 4))), uniform(rng, 1, w_max));
  auto o = std::make_shared<RequirementOracle>(n, c.ground, j, r);
  c.p = o;
  c.value = [o](const VertexSet& x) { return o->value(x); };
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    Weight need = 0;
    for (const auto& x : all_subsets(c.ground)) {
      if (!x.contains(v)) continue;
      ExtInt d = c.value(x) - ExtInt(cover_of(c.h, x, n));
      if (d > ExtInt(need)) need = d.value();
    }
    if (need > 0) edge_add(c.h, {v}, need);
  }
  return c;
}

inline bool is_weak_cover(const CoverInstance& c) {
  for (const auto& x : all_subsets(c.ground))
    if (c.value(x) > ExtInt(cover_of(c.h, x, c.g.num_vertices()))) return false;
  return true;
}

inline Hypergraph appendix_a_instance(int n) {
  std::vector<std::string> ls{"u"};
  for (int i = 1; i < n; ++i) ls.push_back("v" + std::to_string(i));
  Hypergraph h(ls);
  for (Vertex i = 1; i < static_cast<Vertex>(n); ++i)
    for (Vertex j = i + 1; j < static_cast<Vertex>(n); ++j) h.add({i, j}, 1);
  h.add({0}, Weight(n - 1) * (n - 2) / 2);
  return h;
}

inline Hypergraph star_instance(int n) {
  std::vector<std::string> ls{"s"};
  for (int i = 1; i <= n; ++i) ls.push_back("v" + std::to_string(i));
  Hypergraph g(ls);
  Weight w = (Weight(1) << (n - 1)) - 1;
  for (Vertex i = 1; i <= static_cast<Vertex>(n); ++i) g.add({0, i}, w);
  return g;
}

// Random laminar family over n vertices: recursive random refinement.
inline std::vector<VertexSet> random_laminar(Rng& rng, int n) {
  std::vector<VertexSet> out;
  std::function<void(const VertexSet&, int)> grow = [&](const VertexSet& x, int depth) {
    if (x.empty()) return;
    if (uniform(rng, 0, 3)) out.push_back(x);
    if (x.size() < 2 || depth > 6) return;
    std::vector<Vertex> a, b, c;
    for (Vertex v : x) {
      int k = uniform(rng, 0, 2);
      (k == 0 ? a : k == 1 ? b : c).push_back(v);
    }
    grow(VertexSet(a), depth + 1);
    grow(VertexSet(b), depth + 1);
  };
  grow(VertexSet::range(n), 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Random k-hyperedge-connected hypergraph (keeps adding hyperedges until the
// target connectivity is reached).
inline Hypergraph random_kec(Rng& rng, int n, long long k, int size_max, int graph_pct = 50) {
  Hypergraph g(names(n));
  if (n < 2) return g;
  while (!is_k_hyperedge_connected(g, k).ok) {
    int size = uniform(rng, 1, 100) <= graph_pct ? 2 : uniform(rng, 2, std::min(n, size_max));
    g.add(random_subset(rng, n, size), uniform(rng, 1, 2));
  }
  return g;
}

// Every head assignment of unit copies; true if some one is rooted k-connected.
inline bool brute_rooted_orientation_exists(const Hypergraph& g, const VertexSet& terminals, Vertex r, long long k) {
  std::vector<VertexSet> copies;
  for (const auto& [e, w] : g.edges())
    for (Weight i = 0; i < w; ++i) copies.push_back(e);
  std::vector<std::size_t> pick(copies.size(), 0);
  while (true) {
    OrientedHypergraph oh{g, {}};
    for (std::size_t i = 0; i < copies.size(); ++i) oh.heads[copies[i]][copies[i][pick[i]]] += 1;
    bool ok = true;
    for (Vertex t : terminals)
      if (t != r && hyperarc_disjoint_paths(oh, t, r) < k) ok = false;
    if (ok) return true;
    std::size_t i = 0;
    while (i < copies.size() && ++pick[i] == copies[i].size()) pick[i++] = 0;
    if (i == copies.size()) return false;
  }
}

}  // namespace hsplit::testing
