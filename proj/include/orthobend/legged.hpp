#pragma once

#include <vector>

#include "orthobend/embedding.hpp"

namespace orthobend {

struct LeggedCycle {
  std::vector<int> cycle_vertices;   // boundary walk order
  std::vector<int> cycle_edges;      // aligned: edge i joins vertex i and i+1
  std::vector<int> legs;             // edge ids attached from outside
  std::vector<int> leg_vertices;     // attachment vertex per leg, on the cycle
  std::vector<int> region_vertices;  // vertices of the cycle plus its inside
  int k() const { return static_cast<int>(legs.size()); }
};

// All k-legged cycles (k in {2,3}) of the embedded biconnected graph.
std::vector<LeggedCycle> legged_cycles(const Graph& g, const PlanarEmbedding& emb, int k);

// Bad cycles lack the degree-2 vertices required for a bend-free drawing:
// a 2-legged cycle with fewer than two, or a 3-legged cycle with none.
bool is_bad_cycle(const Graph& g, const LeggedCycle& c);

// Dual adjacency: for each unordered face pair, the edges they share.
struct DualAdjacency {
  int nfaces = 0;
  std::vector<std::vector<std::pair<int, std::vector<int>>>> nbr;  // per face: (face, shared edges)
};
DualAdjacency dual_adjacency(const Graph& g, const FaceSet& fs);

}  // namespace orthobend
