// Splits off the centre of a star with large weights and checks that every
// pairwise connectivity among the leaves survives.

#include <iostream>

#include "hsplit/hsplit.hpp"

int main() {
  using namespace hsplit;
  Hypergraph g(std::vector<std::string>{"s", "a", "b", "c", "d"});
  Weight w = (Weight(1) << 20) - 1;
  for (Vertex v = 1; v <= 4; ++v) g.add({0, v}, w);

  SplitOffResult r = complete_h_splitting_off(g, 0);
  std::cout << format_hypergraph(r.graph);
  std::cout << format_split_script(r.script, g);

  Report rep = verify_local_connectivity(g, r.graph, 0);
  std::cout << (rep.ok ? "local connectivity preserved" : rep.failure) << "\n";
  return rep.ok ? 0 : 1;
}
