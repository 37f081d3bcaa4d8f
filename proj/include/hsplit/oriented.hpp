#pragma once

#include <map>

#include "hsplit/hypergraph.hpp"

namespace hsplit {

// A hypergraph with a head chosen for every copy of every hyperedge.
// heads[e] maps a head vertex to the number of copies of e directed to it;
// the counts of e sum to its weight.
struct OrientedHypergraph {
  Hypergraph graph;
  std::map<VertexSet, std::map<Vertex, Weight>> heads;

  void set_head(const VertexSet& e, Vertex h) {
    heads[e] = {{h, graph.weight(e)}};
  }

  void validate() const {
    for (const auto& [e, w] : graph.edges()) {
      auto it = heads.find(e);
      if (it == heads.end()) throw InputError("hyperedge " + graph.describe(e) + " has no head");
      Weight t = 0;
      for (const auto& [h, c] : it->second) {
        if (!e.contains(h)) throw InputError("head outside hyperedge " + graph.describe(e));
        if (c < 1) throw InputError("non-positive head multiplicity");
        t += c;
      }
      if (t != w) throw InputError("head multiplicities of " + graph.describe(e) + " do not match its weight");
    }
    for (const auto& kv : heads)
      if (!graph.has_edge(kv.first)) throw InputError("head given for a missing hyperedge");
  }
};

}  // namespace hsplit
