// Builds the unit triangle back from one vertex by pinchings and additions.

#include <iostream>

#include "hsplit/hsplit.hpp"

int main() {
  using namespace hsplit;
  Hypergraph tri = parse_hypergraph("vertices: a b c\nedge: 1 a b\nedge: 1 b c\nedge: 1 a c\n");
  PinchingScript script = decompose_k_ec(tri, 2);
  std::cout << format_pinching(script);

  ReplayOptions opt;
  opt.check_k = 2;
  bool same = equal_labeled(replay_pinching(script, opt), tri);
  std::cout << (same ? "replay reproduces the triangle" : "replay differs") << "\n";
  return same ? 0 : 1;
}
