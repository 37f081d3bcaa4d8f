// The two-valued function p({u}) = p(V-u) = C(n-1,2): its weak cover by the
// pair edges plus {u} forces every triangle {u,a,b} into the strong cover.

#include <iostream>

#include "hsplit/hsplit.hpp"

int main() {
  using namespace hsplit;
  const int n = 6;
  std::vector<std::string> names{"u"};
  for (int i = 1; i < n; ++i) names.push_back("v" + std::to_string(i));
  Hypergraph h(names);
  for (Vertex i = 1; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) h.add({i, j}, 1);
  h.add({0}, Weight((n - 1) * (n - 2) / 2));

  CoverResult res = strong_cover(h.edges(), appendix_a_oracle(n, 0));
  std::cout << format_hypergraph(h.with_edges(res.edges));
  std::cout << res.edges.size() << " hyperedges after " << res.steps.size() << " merge steps\n";
}
