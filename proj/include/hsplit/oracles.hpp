#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsplit/flow.hpp"
#include "hsplit/hypergraph.hpp"

namespace hsplit {

// Symmetric pair requirements r({u,v}) on a dense index range.
class RequirementFunction {
 public:
  explicit RequirementFunction(std::size_t n = 0) : n_(n), r_(n * n, 0) {}

  std::size_t size() const { return n_; }
  const Weight& operator()(Vertex u, Vertex v) const { return r_.at(u * n_ + v); }
  void set(Vertex u, Vertex v, const Weight& w) {
    if (u == v) throw InputError("requirement on a single vertex");
    if (w < 0) throw InputError("negative requirement");
    r_.at(u * n_ + v) = w;
    r_.at(v * n_ + u) = w;
  }
  Weight max_value() const {
    Weight m = 0;
    for (const auto& w : r_) m = std::max(m, w);
    return m;
  }

  // R(X) = max r over pairs split by X; zero for X empty or X = ground.
  Weight R(const VertexSet& x, const VertexSet& ground) const {
    Weight m = 0;
    VertexSet rest = ground - x;
    for (Vertex u : x)
      for (Vertex v : rest) m = std::max(m, (*this)(u, v));
    return m;
  }

 private:
  std::size_t n_;
  std::vector<Weight> r_;
};

inline RequirementFunction lambda_requirements(const Hypergraph& g, Vertex exclude) {
  if (exclude >= g.num_vertices()) throw InputError("unknown vertex");
  RequirementFunction r(g.num_vertices());
  auto lam = all_pairs_lambda(g);
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v = u + 1; v < g.num_vertices(); ++v)
      if (u != exclude && v != exclude) r.set(u, v, lam[u][v]);
  return r;
}

struct OracleAnswer {
  VertexSet set;
  ExtInt value;  // p(set)
};

// Answers max{p(Z) − d_{G0}(Z) : S0 ⊆ Z ⊆ V−T0} for a hidden set function p
// on ground(). Vertex indices live in [0, universe()).
class SetFunctionOracle {
 public:
  virtual ~SetFunctionOracle() = default;

  virtual const VertexSet& ground() const = 0;
  virtual std::size_t universe() const = 0;

  OracleAnswer query(const EdgeMap& g0, const VertexSet& s0, const VertexSet& t0) const {
    check(g0, s0, t0);
    ++queries_;
    return do_query(g0, s0, t0);
  }

  // max{p(Z) − d_{G0}(Z) − b_{C}(Z)} in one call, when the oracle supports it.
  std::optional<OracleAnswer> query_with_cover(const EdgeMap& g0, const EdgeMap& cover, const VertexSet& s,
                                               const VertexSet& t) const {
    check(g0, s, t);
    check_edges(cover);
    auto a = do_query_with_cover(g0, cover, s, t);
    if (a) ++queries_;
    return a;
  }

  std::size_t query_count() const { return queries_; }

 protected:
  virtual OracleAnswer do_query(const EdgeMap& g0, const VertexSet& s0, const VertexSet& t0) const = 0;
  virtual std::optional<OracleAnswer> do_query_with_cover(const EdgeMap&, const EdgeMap&, const VertexSet&,
                                                          const VertexSet&) const {
    return std::nullopt;
  }

  void check_edges(const EdgeMap& g) const {
    for (const auto& kv : g)
      if (!kv.first.subset_of(ground())) throw InputError("query hyperedge outside the ground set");
  }
  void check(const EdgeMap& g0, const VertexSet& s0, const VertexSet& t0) const {
    if (!s0.subset_of(ground()) || !t0.subset_of(ground())) throw InputError("query set outside the ground set");
    if (s0.intersects(t0)) throw InputError("query sets S0 and T0 overlap");
    check_edges(g0);
  }

 private:
  mutable std::size_t queries_ = 0;
};

using OraclePtr = std::shared_ptr<const SetFunctionOracle>;

// p(X) = R(X) − d_G(X) with R built from pair requirements, answered by
// a maximum over ordered pairs (u, v) of r(u,v) minus a constrained min cut
// in G + G0. Lower bounds from one-sided cuts prune most pairs; pruning
// never changes the answer, which is the first pair in (u, v) order that
// attains the maximum, then ∅, then the whole ground set.
class RequirementOracle : public SetFunctionOracle {
 public:
  RequirementOracle(std::size_t universe, VertexSet ground, EdgeMap base, RequirementFunction r)
      : universe_(universe), ground_(std::move(ground)), base_(std::move(base)), r_(std::move(r)) {
    if (r_.size() < universe_) throw InputError("requirement function smaller than the universe");
    check_edges(base_);
    rmax_ = r_.max_value();
  }

  const VertexSet& ground() const override { return ground_; }
  std::size_t universe() const override { return universe_; }
  const EdgeMap& base() const { return base_; }
  const RequirementFunction& requirements() const { return r_; }

  // Explicit evaluation, for tests and verification only.
  ExtInt value(const VertexSet& x) const {
    return ExtInt(r_.R(x, ground_)) - ExtInt(cut_weight(base_, mask_of(x, universe_ + 1)));
  }

 protected:
  OracleAnswer do_query(const EdgeMap& g0, const VertexSet& s0, const VertexSet& t0) const override {
    EdgeMap total = base_;
    edges_add(total, g0);
    auto [z, obj] = solve(total, s0, t0, false);
    Weight pz = obj + cut_weight(g0, mask_of(z, universe_ + 1));
    return {z, ExtInt(pz)};
  }

  // The coverage term is a cut term once every cover hyperedge is extended
  // by a phantom vertex that is forced outside Z; r vanishes on the phantom.
  std::optional<OracleAnswer> do_query_with_cover(const EdgeMap& g0, const EdgeMap& cover, const VertexSet& s,
                                                  const VertexSet& t) const override {
    Vertex ph = static_cast<Vertex>(universe_);
    EdgeMap total = base_;
    edges_add(total, g0);
    for (const auto& [e, w] : cover) edge_add(total, e.with(ph), w);
    auto [z, obj] = solve(total, s, t.with(ph), true);
    auto in = mask_of(z, universe_ + 1);
    Weight pz = obj + cut_weight(g0, in) + cover_weight(cover, in);
    return OracleAnswer{z, ExtInt(pz)};
  }

 private:
  std::pair<VertexSet, Weight> solve(const EdgeMap& total, const VertexSet& s0, const VertexSet& t0,
                                     bool phantom) const {
    Weight bound = edges_total(total) + rmax_ + 1;
    return with_capacity_type(bound, [&](auto tag) {
      using Cap = decltype(tag);
      return solve_as<Cap>(total, s0, t0, phantom);
    });
  }

  template <class Cap>
  std::pair<VertexSet, Weight> solve_as(const EdgeMap& total, const VertexSet& s0, const VertexSet& t0,
                                        bool phantom) const {
    Vertex ph = static_cast<Vertex>(universe_);
    VertexSet all = phantom ? ground_.with(ph) : ground_;
    std::size_t nv = universe_ + 1;
    CutNetwork<Cap> net(nv, total);
    auto r = [&](Vertex u, Vertex v) -> Cap {
      if (u == ph || v == ph) return Cap(0);
      return cap_from<Cap>(r_(u, v));
    };

    VertexSet us = all - t0, vs = all - s0;
    std::optional<std::pair<Cap, VertexSet>> base_cut;
    auto base = [&]() -> const std::pair<Cap, VertexSet>& {
      if (!base_cut) base_cut = net.min_cut(s0, t0);
      return *base_cut;
    };

    // One-sided bounds: c_u = mc(S0+u, T0) and c'_v = mc(S0, T0+v).
    std::vector<std::optional<std::pair<Cap, VertexSet>>> lu(nv), lv(nv);
    if (!t0.empty())
      for (Vertex u : us) lu[u] = s0.contains(u) ? base() : net.min_cut(s0.with(u), t0);
    if (!s0.empty())
      for (Vertex v : vs) lv[v] = t0.contains(v) ? base() : net.min_cut(s0, t0.with(v));

    struct Best {
      Cap obj;
      std::size_t rank;
      VertexSet z;
    };
    std::optional<Best> best;
    auto consider = [&](const Cap& obj, std::size_t rank, const VertexSet& z) {
      if (!best || obj > best->obj || (obj == best->obj && rank < best->rank)) best = Best{obj, rank, z};
    };

    struct Pending {
      Cap ub;
      std::size_t rank;
      Vertex u, v;
    };
    std::vector<Pending> pending;
    std::size_t rank = 0;
    for (Vertex u : us)
      for (Vertex v : vs) {
        if (u == v) continue;
        std::size_t k = rank++;
        Cap ruv = r(u, v);
        // A one-sided minimal witness that is feasible for the pair is the
        // pair's own minimal witness, so the value is exact.
        if (lu[u] && !lu[u]->second.contains(v)) {
          consider(ruv - lu[u]->first, k, lu[u]->second);
          continue;
        }
        if (lv[v] && lv[v]->second.contains(u)) {
          consider(ruv - lv[v]->first, k, lv[v]->second);
          continue;
        }
        Cap lower = 0;
        if (lu[u]) lower = lu[u]->first;
        if (lv[v] && lv[v]->first > lower) lower = lv[v]->first;
        pending.push_back({ruv - lower, k, u, v});
      }
    if (s0.empty()) consider(Cap(0), rank, VertexSet{});
    if (t0.empty()) consider(Cap(0), rank + 1, all);

    std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
      if (a.ub != b.ub) return a.ub > b.ub;
      return a.rank < b.rank;
    });
    for (const auto& pd : pending) {
      if (best && pd.ub < best->obj) break;
      if (best && pd.ub == best->obj && pd.rank > best->rank) continue;
      auto [c, z] = net.min_cut(s0.with(pd.u), t0.with(pd.v));
      consider(r(pd.u, pd.v) - c, pd.rank, z);
    }
    if (!best) throw ContractViolation("oracle query without feasible set");
    return {best->z, weight_from(best->obj)};
  }

  std::size_t universe_;
  VertexSet ground_;
  EdgeMap base_;
  RequirementFunction r_;
  Weight rmax_;
};

inline OraclePtr strong_oracle_for(const Hypergraph& g, const RequirementFunction& r) {
  return std::make_shared<RequirementOracle>(g.num_vertices(), g.vertices(), g.edges(), r);
}

// Oracle for X ↦ max{p(X ∪ R) − d_{H~}(X ∪ R) : R ⊆ Zc} over ground − Zc,
// i.e. the root function after degree subtractions and contractions.
class ShiftedOracle : public SetFunctionOracle {
 public:
  ShiftedOracle(OraclePtr root, EdgeMap shift, VertexSet contracted)
      : root_(std::move(root)), shift_(std::move(shift)), contracted_(std::move(contracted)) {
    ground_ = root_->ground() - contracted_;
  }

  const VertexSet& ground() const override { return ground_; }
  std::size_t universe() const override { return root_->universe(); }
  const OraclePtr& root() const { return root_; }
  const EdgeMap& shift() const { return shift_; }
  const VertexSet& contracted() const { return contracted_; }

 protected:
  OracleAnswer do_query(const EdgeMap& g0, const VertexSet& s0, const VertexSet& t0) const override {
    EdgeMap g = shift_;
    edges_add(g, g0);
    return lower(root_->query(g, s0, t0));
  }
  std::optional<OracleAnswer> do_query_with_cover(const EdgeMap& g0, const EdgeMap& cover, const VertexSet& s,
                                                  const VertexSet& t) const override {
    EdgeMap g = shift_;
    edges_add(g, g0);
    auto a = root_->query_with_cover(g, cover, s, t);
    if (!a) return std::nullopt;
    return lower(*a);
  }

 private:
  OracleAnswer lower(const OracleAnswer& a) const {
    Weight d = cut_weight(shift_, mask_of(a.set, universe() + 1));
    return {a.set - contracted_, a.value - ExtInt(d)};
  }

  OraclePtr root_;
  EdgeMap shift_;
  VertexSet contracted_;
  VertexSet ground_;
};

// p − d_{H0}; shifts compose into a single wrapper over the root oracle.
inline OraclePtr subtract_cut(const OraclePtr& p, const EdgeMap& h0) {
  for (const auto& kv : h0)
    if (!kv.first.subset_of(p->ground())) throw InputError("subtracted hyperedge outside the ground set");
  if (auto s = std::dynamic_pointer_cast<const ShiftedOracle>(p)) {
    EdgeMap sh = s->shift();
    edges_add(sh, h0);
    return std::make_shared<ShiftedOracle>(s->root(), std::move(sh), s->contracted());
  }
  return std::make_shared<ShiftedOracle>(p, h0, VertexSet{});
}

inline OraclePtr contract_oracle(const OraclePtr& p, const VertexSet& z) {
  if (!z.subset_of(p->ground())) throw InputError("contracted set outside the ground set");
  if (z.empty()) return p;
  if (auto s = std::dynamic_pointer_cast<const ShiftedOracle>(p))
    return std::make_shared<ShiftedOracle>(s->root(), s->shift(), s->contracted() | z);
  return std::make_shared<ShiftedOracle>(p, EdgeMap{}, z);
}

// p(X), through a single strong query.
inline ExtInt evaluate(const SetFunctionOracle& p, const VertexSet& x) {
  return p.query({}, x, p.ground() - x).value;
}

inline ExtInt weak_slack(const OracleAnswer& a, const EdgeMap& cover, std::size_t universe) {
  return a.value - ExtInt(cover_weight(cover, mask_of(a.set, universe + 1)));
}

// max{p(Z) − b_G(Z) : S ⊆ Z ⊆ V−T}. Lifts G by a vertex outside Z so that
// coverage becomes a cut value: one query if T is non-empty, otherwise one
// per vertex outside S plus an evaluation of the whole ground set.
inline OracleAnswer weak_oracle_query(const SetFunctionOracle& p, const EdgeMap& g, const VertexSet& s,
                                      const VertexSet& t) {
  if (s.intersects(t)) throw InputError("weak query sets S and T overlap");
  if (auto a = p.query_with_cover({}, g, s, t)) return *a;
  auto lift = [&](Vertex x) {
    EdgeMap l;
    for (const auto& [e, w] : g) edge_add(l, e.with(x), w);
    return l;
  };
  if (!t.empty()) return p.query(lift(t.front()), s, t);
  std::optional<OracleAnswer> best;
  std::optional<ExtInt> best_slack;
  auto consider = [&](OracleAnswer a) {
    ExtInt sl = weak_slack(a, g, p.universe());
    if (!best || sl > *best_slack) best = std::move(a), best_slack = sl;
  };
  for (Vertex u : p.ground() - s) consider(p.query(lift(u), s, {u}));
  consider({p.ground(), evaluate(p, p.ground())});
  return *best;
}

inline OracleAnswer weak_oracle_query(const SetFunctionOracle& p, const Hypergraph& g, const VertexSet& s,
                                      const VertexSet& t) {
  return weak_oracle_query(p, g.edges(), s, t);
}

// p(X) = C(n−1, 2) for X ∈ {{u}, V−u}, −∞ otherwise.
class AppendixAOracle : public SetFunctionOracle {
 public:
  AppendixAOracle(std::size_t n, Vertex u) : n_(n), u_(u), ground_(VertexSet::range(static_cast<Vertex>(n))) {
    if (n < 3) throw InputError("instance needs at least 3 vertices");
    if (u >= n) throw InputError("special vertex out of range");
    Weight m = static_cast<long long>(n - 1);
    peak_ = m * (m - 1) / 2;
  }
  const VertexSet& ground() const override { return ground_; }
  std::size_t universe() const override { return n_; }
  const Weight& peak() const { return peak_; }

  ExtInt value(const VertexSet& x) const {
    if (x == VertexSet{u_} || x == ground_.without(u_)) return ExtInt(peak_);
    return ExtInt::neg_inf();
  }

 protected:
  OracleAnswer do_query(const EdgeMap& g0, const VertexSet& s0, const VertexSet& t0) const override {
    std::optional<OracleAnswer> best;
    ExtInt best_obj;
    for (const VertexSet& c : {VertexSet{u_}, ground_.without(u_)}) {
      if (!s0.subset_of(c) || c.intersects(t0)) continue;
      ExtInt obj = ExtInt(peak_) - ExtInt(cut_weight(g0, mask_of(c, n_)));
      if (!best || obj > best_obj) best = OracleAnswer{c, ExtInt(peak_)}, best_obj = obj;
    }
    if (best) return *best;
    return {s0, ExtInt::neg_inf()};
  }

 private:
  std::size_t n_;
  Vertex u_;
  VertexSet ground_;
  Weight peak_;
};

inline OraclePtr appendix_a_oracle(std::size_t n, Vertex u) { return std::make_shared<AppendixAOracle>(n, u); }

struct TightSetFamily {
  std::vector<VertexSet> sets;
  bool maximal = true;
  VertexSet uncovered;  // vertices found in no tight set
};

namespace detail {

struct Blocks {
  std::vector<VertexSet> sets;
  std::vector<int> of;  // vertex -> block id, -1 outside

  Blocks(std::vector<VertexSet> s, std::size_t universe) : sets(std::move(s)), of(universe + 1, -1) {
    for (int b = 0; b < static_cast<int>(sets.size()); ++b)
      for (Vertex v : sets[b]) of[v] = b;
  }
  VertexSet close(const VertexSet& z) const {
    VertexSet out = z;
    for (Vertex v : z)
      if (of[v] >= 0) out = out | sets[of[v]];
    return out;
  }
};

inline void check_slack(const ExtInt& s, const VertexSet& z, const char* what) {
  if (s > ExtInt(0))
    throw ContractViolation(std::string(what) + ": p exceeds coverage on a set of size " + std::to_string(z.size()) +
                            " (weak cover violated)");
}

// Grows x, known to lie inside one maximal tight set M, to M itself by
// probing one block at a time. A block that cannot join is excluded from all
// later probes, which is safe because every block lies inside one member.
inline VertexSet grow_tight(const SetFunctionOracle& p, const EdgeMap& h, VertexSet x, const Blocks& blocks,
                            const std::vector<int>& probe, const VertexSet& forbidden, bool stop_on_reject) {
  VertexSet rejected;
  for (int b : probe) {
    const VertexSet& blk = blocks.sets[b];
    if (blk.subset_of(x) || blk.intersects(forbidden)) continue;
    auto a = weak_oracle_query(p, h, x | blk, forbidden | rejected);
    ExtInt s = weak_slack(a, h, p.universe());
    check_slack(s, a.set, "tight-set probe");
    if (s == ExtInt(0)) {
      x = blocks.close(a.set | x);
    } else {
      rejected = rejected | blk;
      if (stop_on_reject) break;
    }
  }
  ExtInt px = evaluate(p, x);
  if (px != ExtInt(cover_weight(h, mask_of(x, p.universe() + 1))))
    throw ContractViolation("grown set is not tight");
  return x;
}

}  // namespace detail

// Maximal (p,H)-tight sets. `hint` may list disjoint sets, each known to lie
// inside a single maximal tight set (for example the previous family); by
// default every vertex is its own block.
inline TightSetFamily maximal_tight_sets(const SetFunctionOracle& p, const EdgeMap& h,
                                         std::vector<VertexSet> hint = {}) {
  VertexSet covered;
  for (const auto& b : hint) covered = covered | b;
  for (Vertex v : p.ground() - covered) hint.push_back({v});
  std::sort(hint.begin(), hint.end());
  detail::Blocks blocks(hint, p.universe());

  TightSetFamily out;
  VertexSet forbidden;
  std::vector<char> done(blocks.sets.size(), 0);
  for (int b = 0; b < static_cast<int>(blocks.sets.size()); ++b) {
    if (done[b]) continue;
    const VertexSet& blk = blocks.sets[b];
    auto a = weak_oracle_query(p, h, blk, forbidden);
    ExtInt s = weak_slack(a, h, p.universe());
    detail::check_slack(s, a.set, "tight-set search");
    if (s < ExtInt(0)) {
      out.uncovered = out.uncovered | blk;
      forbidden = forbidden | blk;
      done[b] = 1;
      continue;
    }
    std::vector<int> probe;
    for (int c = b + 1; c < static_cast<int>(blocks.sets.size()); ++c)
      if (!done[c]) probe.push_back(c);
    VertexSet x = detail::grow_tight(p, h, blocks.close(a.set), blocks, probe, forbidden, false);
    for (Vertex v : x)
      if (blocks.of[v] >= 0) done[blocks.of[v]] = 1;
    forbidden = forbidden | x;
    out.sets.push_back(x);
  }
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

inline TightSetFamily maximal_tight_sets(const SetFunctionOracle& p, const Hypergraph& h) {
  return maximal_tight_sets(p, h.edges());
}

}  // namespace hsplit
