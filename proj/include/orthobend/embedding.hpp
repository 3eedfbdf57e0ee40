#pragma once

#include <vector>

#include "orthobend/graph.hpp"

namespace orthobend {

// Rotation system plus a designated external face. Face ids refer to the
// traversal order produced by faces_of.
struct PlanarEmbedding {
  std::vector<std::vector<int>> rot;  // per vertex, cyclic order of edge ids
  int external_face = 0;
};

// A directed edge side: side = 2*e for u->v (as stored), 2*e+1 for v->u.
inline int side_of(int e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }
inline int side_edge(int s) { return s / 2; }
inline int side_rev(int s) { return s ^ 1; }

struct FaceSet {
  std::vector<std::vector<int>> faces;  // each face: side ids in traversal order
  std::vector<int> face_of_side;        // size 2m
  int size() const { return static_cast<int>(faces.size()); }
  int face_len(int f) const { return static_cast<int>(faces[f].size()); }
};

// Source/target of a side under its direction.
inline int side_from(const Graph& g, int s) {
  const Edge& e = g.edges[side_edge(s)];
  return (s & 1) ? e.v : e.u;
}
inline int side_to(const Graph& g, int s) {
  const Edge& e = g.edges[side_edge(s)];
  return (s & 1) ? e.u : e.v;
}

// Traverses all faces of the rotation system. Throws NonPlanarRotation when
// the face count violates Euler's formula on any connected component.
FaceSet faces_of(const Graph& g, const PlanarEmbedding& emb);

// Same but never throws; for probing arbitrary rotation systems.
FaceSet faces_of_unchecked(const Graph& g, const PlanarEmbedding& emb);

bool rotation_is_planar(const Graph& g, const PlanarEmbedding& emb);

// Successor side inside a face: arrive at v, leave via the rotation-successor
// of the arrival edge.
int next_side(const Graph& g, const PlanarEmbedding& emb, int s);

bool is_planar(const Graph& g);

// Computes a planar embedding (rotation system); external face defaults to
// face 0. Throws NotPlanar.
PlanarEmbedding planar_embed(const Graph& g);

// Position of edge e in rot[v].
int rot_index(const PlanarEmbedding& emb, int v, int e);

}  // namespace orthobend
