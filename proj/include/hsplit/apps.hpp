#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "hsplit/oriented.hpp"
#include "hsplit/splitoff.hpp"

namespace hsplit {

// ---- k-hyperedge-connectivity ----

struct ConnectivityVerdict {
  bool ok = true;
  Weight min_cut;      // global minimum cut (0 when |V| < 2)
  VertexSet witness;   // a minimum cut side
};

inline ConnectivityVerdict is_k_hyperedge_connected(const Hypergraph& h, long long k) {
  if (k < 0) throw InputError("negative connectivity");
  ConnectivityVerdict out;
  if (h.num_vertices() < 2) return out;
  std::optional<Weight> best;
  with_capacity_type(h.total_weight(), [&](auto tag) {
    using Cap = decltype(tag);
    CutNetwork<Cap> net(h.num_vertices(), h.edges());
    for (Vertex u = 1; u < h.num_vertices(); ++u) {
      auto [c, z] = net.min_cut({0}, {u});
      Weight w = weight_from(c);
      if (!best || w < *best) best = w, out.witness = z;
    }
    return 0;
  });
  out.min_cut = *best;
  out.ok = out.min_cut >= k;
  return out;
}

// ---- pinching ----

using Labels = std::vector<std::string>;

struct PinchPart {
  Labels edge;
  std::vector<Labels> pieces;
};

// (k,p)-pinching: one copy of each listed hyperedge is cut into its pieces,
// each piece gets the new vertex s.
struct PinchOp {
  long long k = 0;
  std::string s;
  std::vector<PinchPart> parts;
};

struct PinchStep {
  enum class Kind { add, pinch };
  Kind kind;
  Weight count;  // add: number of copies
  Labels edge;   // add
  PinchOp pinch;
};

struct PinchingScript {
  std::string start;
  std::vector<PinchStep> steps;
};

inline Hypergraph apply_pinching(const Hypergraph& h, const PinchOp& op) {
  if (op.k < 0) throw InputError("negative pinching parameter");
  if (static_cast<long long>(op.parts.size()) > op.k) throw InputError("pinching more hyperedges than k");
  long long total = 0;
  for (const auto& part : op.parts) {
    if (part.pieces.empty()) throw InputError("pinched hyperedge without pieces");
    total += static_cast<long long>(part.pieces.size());
  }
  if (total != op.k) throw InputError("piece count differs from k");
  if (h.find(op.s)) throw InputError("pinch vertex '" + op.s + "' already exists");

  auto [out, s] = h.with_vertex(op.s);
  for (const auto& part : op.parts) {
    VertexSet e = out.vertex_set(part.edge);
    if (e.size() != part.edge.size()) throw InputError("repeated vertex in pinched hyperedge");
    VertexSet seen;
    for (const auto& pc : part.pieces) {
      VertexSet f = out.vertex_set(pc);
      if (f.empty() || f.size() != pc.size()) throw InputError("bad piece in pinching");
      if (f.intersects(seen) || !f.subset_of(e)) throw InputError("pieces do not partition the pinched hyperedge");
      seen = seen | f;
    }
    if (!(seen == e)) throw InputError("pieces do not cover the pinched hyperedge");
    out.subtract(e, 1);
  }
  for (const auto& part : op.parts)
    for (const auto& pc : part.pieces) out.add(out.vertex_set(pc).with(s), 1);
  return out;
}

inline Labels labels_of(const Hypergraph& h, const VertexSet& e) {
  Labels out;
  for (Vertex v : e) out.push_back(h.label(v));
  return out;
}

struct ReplayOptions {
  std::optional<long long> check_k;  // assert k-hyperedge-connectivity after every step
};

inline Hypergraph replay_pinching(const PinchingScript& script, const ReplayOptions& opt = {}) {
  Hypergraph cur(std::vector<std::string>{script.start.empty() ? std::string("v") : script.start});
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const auto& st = script.steps[i];
    try {
      if (st.kind == PinchStep::Kind::add) {
        cur.add(cur.vertex_set(st.edge), st.count);
      } else {
        cur = apply_pinching(cur, st.pinch);
        if (degree(cur, cur.vertex(st.pinch.s)) != st.pinch.k) throw InputError("new vertex degree differs from k");
      }
    } catch (const InputError& ex) {
      throw ReplayError("step " + std::to_string(i + 1) + ": " + ex.what());
    }
    if (opt.check_k && !is_k_hyperedge_connected(cur, *opt.check_k).ok)
      throw ReplayError("step " + std::to_string(i + 1) + " is not " + std::to_string(*opt.check_k) +
                        "-hyperedge-connected");
  }
  return cur;
}

namespace detail {

// Run-length multiset of unit copies, each carrying the pieces it was merged from.
using Pieces = std::vector<VertexSet>;
using CopyRuns = std::deque<std::pair<Pieces, Weight>>;

inline std::vector<std::pair<Pieces, Weight>> take(CopyRuns& q, Weight a) {
  std::vector<std::pair<Pieces, Weight>> out;
  while (a > 0) {
    if (q.empty()) throw ContractViolation("trace consumes more copies than present");
    auto& front = q.front();
    Weight t = std::min(a, front.second);
    out.emplace_back(front.first, t);
    front.second -= t;
    a -= t;
    if (front.second == 0) q.pop_front();
  }
  return out;
}

}  // namespace detail

// Reverses the construction: copies whose removal keeps k-hyperedge-
// connectivity become `add` steps; otherwise a vertex of degree k is split
// off, deleted, and becomes a pinch. The final script runs forward from the
// last remaining vertex.
inline PinchingScript decompose_k_ec(const Hypergraph& input, long long k) {
  auto v0 = is_k_hyperedge_connected(input, k);
  if (!v0.ok)
    throw PreconditionError("not " + std::to_string(k) + "-hyperedge-connected: cut " + input.describe(v0.witness) +
                            " has value " + v0.min_cut.str());
  if (input.num_vertices() == 0) throw InputError("empty vertex set");
  std::vector<PinchStep> rev;
  Hypergraph h = input;
  while (true) {
    std::vector<VertexSet> order;
    for (const auto& kv : h.edges()) order.push_back(kv.first);
    for (const auto& e : order) {
      Weight w = h.weight(e);
      Weight m = w;
      if (e.size() >= 2) {
        for (Vertex b : e)
          if (b != e.front()) {
            Weight slack = lambda(h, e.front(), b) - k;
            if (slack < m) m = slack;
          }
      }
      if (m <= 0) continue;
      h.subtract(e, m);
      rev.push_back({PinchStep::Kind::add, m, labels_of(h, e), {}});
    }
    if (h.num_vertices() == 1) break;

    std::optional<Vertex> u;
    for (Vertex v = 0; v < h.num_vertices() && !u; ++v)
      if (cut_value(h, {v}) == k) u = v;
    if (!u) throw ContractViolation("no vertex of degree k in a minimally k-hyperedge-connected hypergraph");
    if (degree(h, *u) != k) throw ContractViolation("vertex of degree k carries a singleton hyperedge");

    SplitOffResult so = complete_h_splitting_off(h, *u);
    // Follow unit copies of the hyperedges through u to the trimmed ones.
    std::map<VertexSet, detail::CopyRuns> active, done;
    for (const auto& [e, w] : h.edges())
      if (e.contains(*u)) active[e.without(*u)].push_back({{e.without(*u)}, w});
    for (const auto& t : so.cover.trace.entries) {
      if (t.kind == TraceEntry::Kind::merge) {
        auto a = detail::take(active[t.e], t.alpha), b = detail::take(active[t.f], t.alpha);
        std::size_t i = 0, j = 0;
        Weight ra = a.empty() ? Weight(0) : a[0].second, rb = b.empty() ? Weight(0) : b[0].second;
        auto& dst = active[t.e | t.f];
        while (i < a.size() && j < b.size()) {
          Weight c = std::min(ra, rb);
          detail::Pieces pc = a[i].first;
          pc.insert(pc.end(), b[j].first.begin(), b[j].first.end());
          std::sort(pc.begin(), pc.end());
          dst.push_back({pc, c});
          ra -= c;
          rb -= c;
          if (ra == 0 && ++i < a.size()) ra = a[i].second;
          if (rb == 0 && ++j < b.size()) rb = b[j].second;
        }
      } else {
        for (auto& run : detail::take(active[t.e], t.alpha)) done[t.e].push_back(run);
      }
    }
    PinchOp op;
    op.k = k;
    op.s = h.label(*u);
    for (auto& [g, runs] : done)
      for (auto& [pc, c] : runs)
        for (Weight i = 0; i < c; ++i) {
          PinchPart part{labels_of(h, g), {}};
          for (const auto& x : pc) part.pieces.push_back(labels_of(h, x));
          op.parts.push_back(part);
        }
    rev.push_back({PinchStep::Kind::pinch, 0, {}, op});
    h = delete_vertex(so.graph, *u);
  }
  PinchingScript out;
  out.start = h.label(0);
  out.steps.assign(rev.rbegin(), rev.rend());
  return out;
}

// ---- weak partition connectivity ----

struct WpcVerdict {
  enum class Kind { yes, no, unknown };
  Kind kind = Kind::yes;
  std::vector<VertexSet> partition;  // violating partition when no
};

inline WpcVerdict weak_partition_connectivity(const Hypergraph& h, long long k, bool exact = true) {
  if (k < 0) throw InputError("negative connectivity");
  WpcVerdict out;
  const std::size_t n = h.num_vertices();
  if (k == 0 || n < 2) return out;
  if (exact && n <= 12) {
    // Restricted growth strings enumerate every partition once.
    std::vector<int> a(n, 0), mx(n, 0);
    std::vector<std::pair<std::vector<Vertex>, Weight>> edges;
    for (const auto& [e, w] : h.edges()) edges.emplace_back(e.data(), w);
    std::vector<char> seen(n);
    while (true) {
      int parts = mx[n - 1] + 1;
      if (parts >= 2) {
        Weight lhs = 0;
        for (const auto& [e, w] : edges) {
          int c = 0;
          for (Vertex v : e)
            if (!seen[a[v]]) seen[a[v]] = 1, ++c;
          for (Vertex v : e) seen[a[v]] = 0;
          lhs += w * (c - 1);
        }
        if (lhs < Weight(k) * (parts - 1)) {
          out.kind = WpcVerdict::Kind::no;
          std::vector<std::vector<Vertex>> ps(parts);
          for (std::size_t v = 0; v < n; ++v) ps[a[v]].push_back(static_cast<Vertex>(v));
          for (auto& p : ps) out.partition.emplace_back(std::move(p));
          return out;
        }
      }
      std::size_t i = n - 1;
      while (i > 0 && a[i] == mx[i - 1] + 1) --i;
      if (i == 0) break;
      ++a[i];
      mx[i] = std::max(mx[i - 1], a[i]);
      for (std::size_t j = i + 1; j < n; ++j) a[j] = 0, mx[j] = mx[i];
    }
    return out;
  }
  if (is_k_hyperedge_connected(h, 2 * k).ok) return out;
  auto c = is_k_hyperedge_connected(h, k);
  if (!c.ok) {
    out.kind = WpcVerdict::Kind::no;
    out.partition = {c.witness, h.vertices() - c.witness};
    return out;
  }
  out.kind = WpcVerdict::Kind::unknown;
  return out;
}

// ---- orientation ----

// Heads of the copies entering H at the post-step hyperedges are matched
// with copies of the pre-step hyperedge, taken in increasing head order.
inline OrientedHypergraph lift_orientation(const Hypergraph& g, Vertex s, const SplitOp& op,
                                           const OrientedHypergraph& post) {
  if (!(apply_split_op(g, s, op).edges() == post.graph.edges()) || !g.same_vertices(post.graph))
    throw InputError("orientation does not match the split step");
  post.validate();
  OrientedHypergraph out{g, post.heads};
  const VertexSet target = op.kind == SplitOp::Kind::hmerge ? (op.e | op.f) : op.e.without(s);
  auto& th = out.heads[target];
  Weight need = op.alpha;
  std::vector<std::pair<Vertex, Weight>> taken;
  for (auto it = th.begin(); it != th.end() && need > 0;) {
    Weight c = std::min(need, it->second);
    taken.emplace_back(it->first, c);
    need -= c;
    it->second -= c;
    it = it->second == 0 ? th.erase(it) : std::next(it);
  }
  if (need > 0) throw InputError("orientation has too few copies of the split hyperedge");
  if (th.empty()) out.heads.erase(target);
  for (const auto& [hd, c] : taken) {
    if (op.kind == SplitOp::Kind::hmerge) {
      out.heads[op.e][op.e.contains(hd) ? hd : s] += c;
      out.heads[op.f][op.f.contains(hd) ? hd : s] += c;
    } else {
      out.heads[op.e][hd] += c;
    }
  }
  out.validate();
  return out;
}

namespace detail {

// min{b(X) − m(X) : S ⊆ X ⊆ T−F} over the edges of h, by a bipartite cut.
template <class Cap>
Weight coverage_minus(const EdgeMap& h, const std::vector<Weight>& m, const VertexSet& ground, const VertexSet& s,
                      const VertexSet& f, const Cap& inf) {
  std::size_t nv = m.size();
  int src = static_cast<int>(nv), snk = src + 1;
  Dinic<Cap> net(snk + 1 + static_cast<int>(h.size()));
  int j = snk + 1;
  Weight mt = 0;
  for (Vertex v : ground) {
    net.add_arc(src, static_cast<int>(v), cap_from<Cap>(m[v]));
    mt += m[v];
  }
  for (const auto& [e, w] : h) {
    for (Vertex v : e) net.add_arc(static_cast<int>(v), j, inf);
    net.add_arc(j, snk, cap_from<Cap>(w));
    ++j;
  }
  std::vector<char> role(j, 0);
  role[src] = 1;
  role[snk] = 2;
  for (Vertex v : s) role[v] = 1;
  for (Vertex v : f) role[v] = 2;
  return weight_from(net.run(role, inf)) - mt;
}

}  // namespace detail

// Rooted k-hyperarc-connected orientation of h restricted to `ground` (all
// of whose vertices are terminals). In-degree vectors of such orientations
// are the bases of the polymatroid m(X) ≤ b(X) − k·[r ∉ X]; greedy finds a
// maximal vector, which has full size exactly when an orientation exists.
inline OrientedHypergraph rooted_orientation(const Hypergraph& g, const VertexSet& ground, Vertex r, long long k) {
  EdgeMap h;
  for (const auto& [e, w] : g.edges())
    if (e.subset_of(ground)) edge_add(h, e, w);
  const std::size_t n = g.num_vertices();
  const Weight total = edges_total(h);
  std::vector<Weight> m(n, 0);
  OrientedHypergraph out{g, {}};
  with_capacity_type(total + k + 1, [&](auto tag) {
    using Cap = decltype(tag);
    Cap inf = cap_from<Cap>(total + k + 1);
    Weight placed = 0;
    for (Vertex v : ground) {
      Weight d = total - placed;
      Weight with_r = detail::coverage_minus<Cap>(h, m, ground, VertexSet{v, r}, {}, inf);
      d = std::min(d, with_r);
      if (v != r) d = std::min(d, detail::coverage_minus<Cap>(h, m, ground, {v}, {r}, inf) - k);
      if (d < 0) throw ContractViolation("orientation polytope is empty");
      m[v] += d;
      placed += d;
    }
    if (placed != total) throw ContractViolation("no rooted orientation: greedy in-degree vector is short");

    // Realize m by a bipartite flow from hyperedges to heads.
    int src = static_cast<int>(n), snk = src + 1;
    Dinic<Cap> net(snk + 1 + static_cast<int>(h.size()));
    std::vector<std::pair<const VertexSet*, std::vector<std::pair<Vertex, int>>>> arcs;
    int j = snk + 1;
    for (const auto& [e, w] : h) {
      net.add_arc(src, j, cap_from<Cap>(w));
      std::vector<std::pair<Vertex, int>> a;
      for (Vertex v : e) a.emplace_back(v, net.add_arc(j, static_cast<int>(v), inf));
      arcs.emplace_back(&e, std::move(a));
      ++j;
    }
    for (Vertex v : ground) net.add_arc(static_cast<int>(v), snk, cap_from<Cap>(m[v]));
    std::vector<char> role(j, 0);
    role[src] = 1;
    role[snk] = 2;
    if (weight_from(net.run(role, inf)) != total) throw ContractViolation("in-degree vector not realizable");
    for (const auto& [e, a] : arcs)
      for (const auto& [v, arc] : a) {
        Weight f = weight_from(net.flow(arc));
        if (f > 0) out.heads[*e][v] = f;
      }
    return 0;
  });
  for (const auto& [e, w] : g.edges())
    if (!e.subset_of(ground)) {
      if (e.size() != 1) throw InputError("hyperedge leaves the orientation ground set");
      out.heads[e][e.front()] = w;
    }
  out.validate();
  return out;
}

inline Report verify_rooted_orientation(const OrientedHypergraph& oh, const VertexSet& terminals, Vertex r,
                                        long long k) {
  for (Vertex t : terminals) {
    if (t == r) continue;
    Weight c = hyperarc_disjoint_paths(oh, t, r);
    if (c < k)
      return Report::fail("only " + c.str() + " hyperarc-disjoint paths from " + oh.graph.label(t) + " to " +
                          oh.graph.label(r));
  }
  return {};
}

// Splits off the Steiner vertices in canonical order, orients what remains on
// the terminals and lifts the orientation back through every split step.
inline OrientedHypergraph steiner_rooted_orientation(const Hypergraph& g, const VertexSet& terminals, Vertex r,
                                                     long long k) {
  if (k < 0) throw InputError("negative connectivity");
  g.check_subset(terminals);
  if (!terminals.contains(r)) throw InputError("root is not a terminal");
  auto lam = all_pairs_lambda(g);
  for (Vertex u : terminals)
    for (Vertex v : terminals)
      if (u < v && lam[u][v] < 2 * k)
        throw PreconditionError("not Steiner " + std::to_string(2 * k) + "-hyperedge-connected: lambda(" +
                                g.label(u) + "," + g.label(v) + ") = " + lam[u][v].str());
  std::vector<std::pair<Hypergraph, SplitOffScript>> steps;
  Hypergraph cur = g;
  for (Vertex u : g.vertices() - terminals) {
    SplitOffResult so = complete_h_splitting_off(cur, u);
    steps.emplace_back(cur, so.script);
    cur = so.graph;
  }
  OrientedHypergraph oh = rooted_orientation(cur, terminals, r, k);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const auto& [pre, script] = *it;
    std::vector<Hypergraph> chain{pre};
    for (const auto& op : script.ops) chain.push_back(apply_split_op(chain.back(), script.vertex, op));
    for (std::size_t i = script.ops.size(); i-- > 0;) oh = lift_orientation(chain[i], script.vertex, script.ops[i], oh);
  }
  Report rep = verify_rooted_orientation(oh, terminals, r, k);
  if (!rep.ok) throw ContractViolation("orientation check failed: " + rep.failure);
  return oh;
}

// ---- Menger ----

struct MengerPath {
  std::vector<Vertex> vertices;
  std::vector<VertexSet> edges;  // edges[i] joins vertices[i] and vertices[i+1]
  Weight multiplicity;
};

// λ(u,v) hyperedge-disjoint u–v paths (unit copies), from a maximum flow.
inline std::vector<MengerPath> menger_paths(const Hypergraph& g, Vertex u, Vertex v) {
  if (u == v) throw InputError("paths need distinct endpoints");
  g.check_subset({u, v});
  std::vector<MengerPath> out;
  with_capacity_type(g.total_weight(), [&](auto tag) {
    using Cap = decltype(tag);
    CutNetwork<Cap> net(g.num_vertices(), g.edges());
    net.min_cut({u}, {v});
    for (auto& p : net.decompose(u, v)) out.push_back({p.vertices, p.edges, weight_from(p.multiplicity)});
    return 0;
  });
  return out;
}

}  // namespace hsplit
