#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hsplit/oracles.hpp"

namespace hsplit {

struct CoverStep {
  VertexSet e, f;
  ExtInt beta_m;
  Weight alpha_m;
  ExtInt beta_r;
  Weight alpha_r;
  VertexSet z;  // vertices contracted after the step
};

struct TraceEntry {
  enum class Kind { merge, reduce };
  Kind kind;
  VertexSet e, f;  // f unused for reduce
  Weight alpha;
};

// Merges on the aggregated hypergraph, interleaved with the reductions that
// freeze weight into the output. Replaying it from the input reproduces the
// output exactly (see replay_trace).
struct MergeTrace {
  std::vector<TraceEntry> entries;
};

struct CoverResult {
  EdgeMap edges;   // the strong cover: merged output plus carved weight
  EdgeMap merged;  // output of the merging phase alone
  EdgeMap carved;  // weight removed by preprocessing
  MergeTrace trace;
  std::vector<CoverStep> steps;
  std::size_t depth = 0;         // recursive calls, base case included
  std::size_t core_edges = 0;    // |E| after preprocessing
  std::size_t core_vertices = 0; // |V| after preprocessing
};

struct CoverOptions {
  bool check_steps = true;    // per-step bookkeeping identities
  bool check_family = false;  // recompute tight families from scratch and compare
  // Sees every level's function, hypergraph and maximal tight family.
  std::function<void(const SetFunctionOracle&, const EdgeMap&, const TightSetFamily&)> on_level;
};

struct PreprocessResult {
  EdgeMap h;
  OraclePtr p;
  std::vector<std::pair<VertexSet, Weight>> carved;
  VertexSet z;
};

// Reduces every hyperedge by min{w(e), β(e)}, β(e) = min over X ⊇ e of
// b(X) − p(X), so that each hyperedge ends inside a tight set; then contracts
// the vertices left uncovered. One pass in canonical order suffices because
// reductions never increase any slack.
inline PreprocessResult preprocess(const EdgeMap& h, OraclePtr p, MergeTrace* trace = nullptr) {
  PreprocessResult out;
  out.h = h;
  std::vector<VertexSet> order;
  for (const auto& kv : h) order.push_back(kv.first);
  for (const auto& e : order) {
    auto a = weak_oracle_query(*p, out.h, e, {});
    ExtInt slack = weak_slack(a, out.h, p->universe());
    detail::check_slack(slack, a.set, "preprocessing");
    ExtInt beta = -slack;
    Weight w = out.h.at(e);
    Weight alpha = beta < ExtInt(w) ? beta.value() : w;
    if (alpha == 0) continue;
    edge_sub(out.h, e, alpha);
    p = subtract_cut(p, EdgeMap{{e, alpha}});
    out.carved.emplace_back(e, alpha);
    if (trace) trace->entries.push_back({TraceEntry::Kind::reduce, e, {}, alpha});
  }
  out.z = p->ground() - support(out.h);
  out.p = contract_oracle(p, out.z);
  return out;
}

namespace detail {

inline std::vector<VertexSet> project(const std::vector<VertexSet>& fam, const VertexSet& z) {
  std::vector<VertexSet> out;
  for (const auto& y : fam) {
    VertexSet r = y - z;
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

// The next level's maximal tight family. Slack drops only on sets meeting
// both merged hyperedges, so the only member that can change is the one
// containing the members y1, y2 that held them.
inline TightSetFamily next_family(const SetFunctionOracle& p, const EdgeMap& h, const std::vector<VertexSet>& prev,
                                  const VertexSet& z, const VertexSet& y1, const VertexSet& y2) {
  std::vector<VertexSet> blocks = project(prev, z);
  VertexSet b1 = y1 - z, b2 = y2 - z;
  if (b1.empty() && b2.empty()) return maximal_tight_sets(p, h, blocks);
  std::sort(blocks.begin(), blocks.end());
  Blocks bi(blocks, p.universe());
  VertexSet start;
  if (!b1.empty() && !b2.empty()) {
    auto a = weak_oracle_query(p, h, b1 | b2, {});
    ExtInt s = weak_slack(a, h, p.universe());
    check_slack(s, a.set, "tight-set update");
    if (s < ExtInt(0)) return TightSetFamily{blocks, true, {}};
    start = bi.close(a.set | b1 | b2);
  } else {
    start = b1.empty() ? b2 : b1;
  }
  std::vector<int> probe;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    if (!blocks[b].subset_of(start)) probe.push_back(b);
  VertexSet x = grow_tight(p, h, start, bi, probe, {}, false);
  TightSetFamily out;
  out.sets.push_back(x);
  for (const auto& b : blocks)
    if (!b.subset_of(x)) out.sets.push_back(b);
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

}  // namespace detail

// Merging phase on an instance where every hyperedge lies in a tight set and
// every vertex is covered. Returns only the merged output in `merged`.
inline CoverResult weak_to_strong_cover(const EdgeMap& h_in, OraclePtr p, const CoverOptions& opt = {},
                                        MergeTrace trace = {}) {
  CoverResult res;
  res.trace = std::move(trace);
  EdgeMap h = h_in;
  res.core_edges = h.size();
  res.core_vertices = p->ground().size();
  if (!(support(h) == p->ground())) throw ContractViolation("cover input has uncovered ground vertices");
  const std::size_t n = p->universe();
  const long long depth_bound =
      static_cast<long long>(res.core_edges) + 10 * static_cast<long long>(res.core_vertices) - 1;

  TightSetFamily fam = maximal_tight_sets(*p, h);
  res.depth = 1;
  while (!h.empty()) {
    if (opt.on_level) opt.on_level(*p, h, fam);
    if (!fam.uncovered.empty()) throw ContractViolation("a vertex lies in no tight set");
    // Pick e, f in the two canonically smallest members holding hyperedges.
    std::vector<std::optional<VertexSet>> first(fam.sets.size());
    for (const auto& [e, w] : h) {
      int k = -1;
      for (int i = 0; i < static_cast<int>(fam.sets.size()); ++i)
        if (e.subset_of(fam.sets[i])) k = i;
      if (k < 0) throw ContractViolation("hyperedge outside every maximal tight set");
      if (!first[k]) first[k] = e;
    }
    std::vector<int> holders;
    for (int i = 0; i < static_cast<int>(fam.sets.size()) && holders.size() < 2; ++i)
      if (first[i]) holders.push_back(i);
    if (holders.size() < 2) throw ContractViolation("fewer than two maximal tight sets hold hyperedges");
    const VertexSet y1 = fam.sets[holders[0]], y2 = fam.sets[holders[1]];
    const VertexSet e = *first[holders[0]], f = *first[holders[1]];
    const Weight we = h.at(e), wf = h.at(f);

    CoverStep st;
    st.e = e;
    st.f = f;
    st.beta_m = ExtInt::pos_inf();
    for (Vertex u : e)
      for (Vertex v : f) {
        auto a = weak_oracle_query(*p, h, VertexSet{u, v}, {});
        ExtInt s = weak_slack(a, h, n);
        detail::check_slack(s, a.set, "merge bound");
        st.beta_m = min(st.beta_m, -s);
      }
    st.alpha_m = std::min(we, wf);
    if (st.beta_m < ExtInt(st.alpha_m)) st.alpha_m = st.beta_m.value();
    if (st.alpha_m < 1) throw ContractViolation("merge amount below one");

    const VertexSet g = e | f;
    const Weight wg = h.count(g) ? h.at(g) : Weight(0);
    edge_sub(h, e, st.alpha_m);
    edge_sub(h, f, st.alpha_m);
    edge_add(h, g, st.alpha_m);
    res.trace.entries.push_back({TraceEntry::Kind::merge, e, f, st.alpha_m});

    auto a = weak_oracle_query(*p, h, g, {});
    ExtInt s = weak_slack(a, h, n);
    detail::check_slack(s, a.set, "reduce bound");
    st.beta_r = -s;
    const Weight wgm = h.at(g);
    st.alpha_r = st.beta_r < ExtInt(wgm) ? st.beta_r.value() : wgm;

    if (opt.check_steps) {
      Weight em = h.count(e) ? h.at(e) : Weight(0), fm = h.count(f) ? h.at(f) : Weight(0);
      if (em != we - st.alpha_m || fm != wf - st.alpha_m || wgm != wg + st.alpha_m)
        throw ContractViolation("merge bookkeeping mismatch");
      if (st.alpha_r < 0 || st.alpha_r > wgm) throw ContractViolation("reduce amount out of range");
      // α^R = 0 forces α^M = β^M. The converse needs both e and f to keep
      // some weight after the merge; with one of them used up it fails
      // already on the unit star with three leaves.
      const bool attained = ExtInt(st.alpha_m) == st.beta_m;
      if (st.alpha_r == 0 && !attained) throw ContractViolation("zero reduce amount with unattained merge bound");
      if (attained && st.alpha_m < std::min(we, wf) && st.alpha_r != 0)
        throw ContractViolation("attained merge bound with positive reduce amount");
    }

    if (st.alpha_r > 0) {
      edge_sub(h, g, st.alpha_r);
      if (opt.check_steps && (h.count(g) ? h.at(g) : Weight(0)) != wgm - st.alpha_r)
        throw ContractViolation("reduce bookkeeping mismatch");
      p = subtract_cut(p, EdgeMap{{g, st.alpha_r}});
      edge_add(res.merged, g, st.alpha_r);
      res.trace.entries.push_back({TraceEntry::Kind::reduce, g, {}, st.alpha_r});
    }
    st.z = p->ground() - support(h);
    p = contract_oracle(p, st.z);
    res.steps.push_back(st);
    ++res.depth;
    if (static_cast<long long>(res.depth) > depth_bound) throw ContractViolation("recursion depth bound exceeded");
    if (h.empty()) break;

    fam = detail::next_family(*p, h, fam.sets, st.z, y1, y2);
    if (opt.check_family) {
      TightSetFamily full = maximal_tight_sets(*p, h);
      if (full.sets != fam.sets) throw ContractViolation("incremental tight family differs from recomputation");
    }
  }
  res.edges = res.merged;
  return res;
}

// Preprocessing followed by the merging phase; the result covers p strongly.
inline CoverResult strong_cover(const EdgeMap& h, const OraclePtr& p, const CoverOptions& opt = {}) {
  MergeTrace trace;
  PreprocessResult pre = preprocess(h, p, &trace);
  CoverResult res = weak_to_strong_cover(pre.h, pre.p, opt, std::move(trace));
  for (const auto& [e, w] : pre.carved) edge_add(res.carved, e, w);
  edges_add(res.edges, res.carved);
  return res;
}

// Applies merges to the input and moves reduced weight into the output.
inline EdgeMap replay_trace(const EdgeMap& h, const MergeTrace& trace) {
  EdgeMap active = h, frozen;
  std::size_t i = 0;
  for (const auto& t : trace.entries) {
    try {
      if (t.kind == TraceEntry::Kind::merge) {
        if (t.e.intersects(t.f)) throw ReplayError("merge of intersecting hyperedges");
        edge_sub(active, t.e, t.alpha);
        edge_sub(active, t.f, t.alpha);
        edge_add(active, t.e | t.f, t.alpha);
      } else {
        edge_sub(active, t.e, t.alpha);
        edge_add(frozen, t.e, t.alpha);
      }
    } catch (const InputError& ex) {
      throw ReplayError("trace entry " + std::to_string(i) + ": " + ex.what());
    }
    ++i;
  }
  if (!active.empty()) throw ReplayError("trace leaves weight unassigned");
  return frozen;
}

struct Report {
  bool ok = true;
  std::string failure;
  static Report fail(std::string why) { return {false, std::move(why)}; }
};

// Checks strong cover (by enumeration), trace replay and the size bounds.
inline Report verify_cover_result(const EdgeMap& h, const VertexSet& ground,
                                  const std::function<ExtInt(const VertexSet&)>& p, const CoverResult& res) {
  if (ground.size() > 12) return Report::fail("ground set too large to enumerate");
  std::size_t span = span_of(h, ground) + 1;
  for (std::size_t m = 0; m < (std::size_t(1) << ground.size()); ++m) {
    std::vector<Vertex> xs;
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (m >> i & 1) xs.push_back(ground[i]);
    VertexSet x(xs);
    ExtInt px = p(x);
    std::size_t sp = std::max(span, span_of(res.edges, x) + 1);
    if (ExtInt(cut_weight(res.edges, mask_of(x, sp))) < px)
      return Report::fail("strong cover fails on a set of size " + std::to_string(x.size()));
  }
  try {
    if (replay_trace(h, res.trace) != res.edges) return Report::fail("trace replay mismatch");
  } catch (const ReplayError& ex) {
    return Report::fail(std::string("trace replay mismatch: ") + ex.what());
  }
  long long surplus = static_cast<long long>(res.merged.size()) - static_cast<long long>(res.core_edges);
  if (res.core_vertices > 0 && surplus > 10 * static_cast<long long>(res.core_vertices) - 2)
    return Report::fail("size bound exceeded");
  if (res.core_edges > 0 &&
      static_cast<long long>(res.depth) > static_cast<long long>(res.core_edges + 10 * res.core_vertices) - 1)
    return Report::fail("depth bound exceeded");
  return {};
}

inline bool is_laminar(const std::vector<VertexSet>& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      const auto& a = fam[i];
      const auto& b = fam[j];
      if (a.intersects(b) && !a.subset_of(b) && !b.subset_of(a)) return false;
    }
  return true;
}

// {X − Z : X ∈ L} without ∅ and duplicates; laminar whenever L is.
inline std::vector<VertexSet> project_laminar(const std::vector<VertexSet>& fam, const VertexSet& z) {
  if (!is_laminar(fam)) throw InputError("family is not laminar");
  std::vector<VertexSet> out = detail::project(fam, z);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hsplit
