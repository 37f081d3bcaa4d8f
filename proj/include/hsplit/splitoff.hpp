#pragma once

#include <string>
#include <vector>

#include "hsplit/cover.hpp"

namespace hsplit {

struct SplitOp {
  enum class Kind { hmerge, htrim };
  Kind kind;
  VertexSet e, f;  // f unused for htrim
  Weight alpha;
};

struct SplitOffScript {
  Vertex vertex = 0;
  std::vector<SplitOp> ops;
};

struct SplitOffResult {
  Hypergraph graph;
  SplitOffScript script;
  long long extra_edges = 0;  // |E*| − |E|
  CoverResult cover;
};

inline Hypergraph apply_split_op(const Hypergraph& g, Vertex s, const SplitOp& op) {
  if (op.kind == SplitOp::Kind::hmerge) return h_merge_at(g, s, op.e, op.f, op.alpha);
  return h_trim_at(g, s, op.e, op.alpha);
}

// Local-connectivity-preserving complete h-splitting-off at s. The hyperedges
// through s, minus s, form a weak cover of R − d_J on V − s, where R is the
// λ-requirement of G; a strong cover of it replaces them.
inline SplitOffResult complete_h_splitting_off(const Hypergraph& g, Vertex s, const CoverOptions& opt = {}) {
  if (s >= g.num_vertices()) throw InputError("unknown vertex");
  const std::size_t n = g.num_vertices();
  EdgeMap h, j;
  std::optional<Weight> loop;  // the singleton {s} has no cut and is kept as is
  for (const auto& [e, w] : g.edges()) {
    if (!e.contains(s)) edge_add(j, e, w);
    else if (e.size() == 1) loop = w;
    else edge_add(h, e.without(s), w);  // distinct hyperedges keep distinct projections
  }
  SplitOffResult out;
  out.script.vertex = s;
  if (h.empty()) {
    out.graph = g;
    return out;
  }
  auto p = std::make_shared<RequirementOracle>(n, g.vertices().without(s), j, lambda_requirements(g, s));
  out.cover = strong_cover(h, p, opt);

  EdgeMap gstar = j;
  edges_add(gstar, out.cover.edges);
  if (loop) edge_add(gstar, {s}, *loop);
  out.graph = g.with_edges(std::move(gstar));

  for (const auto& t : out.cover.trace.entries)
    if (t.kind == TraceEntry::Kind::merge)
      out.script.ops.push_back({SplitOp::Kind::hmerge, t.e.with(s), t.f.with(s), t.alpha});
  for (const auto& [e, w] : out.cover.edges) out.script.ops.push_back({SplitOp::Kind::htrim, e.with(s), {}, w});
  out.extra_edges = static_cast<long long>(out.graph.num_edges()) - static_cast<long long>(g.num_edges());
  return out;
}

inline Hypergraph script_to_G_star(const Hypergraph& g, const SplitOffScript& script) {
  if (script.vertex >= g.num_vertices()) throw ReplayError("script vertex out of range");
  Hypergraph cur = g;
  for (std::size_t i = 0; i < script.ops.size(); ++i) {
    try {
      cur = apply_split_op(cur, script.vertex, script.ops[i]);
    } catch (const InputError& ex) {
      throw ReplayError("step " + std::to_string(i + 1) + ": " + ex.what());
    }
  }
  return cur;
}

// λ over V − s must agree and s must lie in no hyperedge of size two or more.
inline Report verify_local_connectivity(const Hypergraph& g, const Hypergraph& gstar, Vertex s,
                                        bool brute_force = false) {
  if (!g.same_vertices(gstar)) throw InputError("vertex sets differ");
  if (s >= g.num_vertices()) throw InputError("unknown vertex");
  if (cut_value(gstar, {s}) != 0) return Report::fail("vertex " + g.label(s) + " is not isolated");
  auto lam = [&](const Hypergraph& x, Vertex u, Vertex v) {
    return brute_force ? brute_force_min_cut(x, {u}, {v}).value : lambda(x, u, v);
  };
  std::vector<std::vector<Weight>> a, b;
  if (!brute_force) a = all_pairs_lambda(g), b = all_pairs_lambda(gstar);
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
      if (u == s || v == s) continue;
      Weight x = brute_force ? lam(g, u, v) : a[u][v];
      Weight y = brute_force ? lam(gstar, u, v) : b[u][v];
      if (x != y)
        return Report::fail("lambda(" + g.label(u) + "," + g.label(v) + ") is " + y.str() + ", expected " + x.str());
    }
  return {};
}

}  // namespace hsplit
