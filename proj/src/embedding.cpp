#include "orthobend/embedding.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

namespace orthobend {

int rot_index(const PlanarEmbedding& emb, int v, int e) {
  const auto& r = emb.rot[v];
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] == e) return static_cast<int>(i);
  fail(errc::internal, "edge not present in rotation");
}

int next_side(const Graph& g, const PlanarEmbedding& emb, int s) {
  int v = side_to(g, s);
  int e = side_edge(s);
  int i = rot_index(emb, v, e);
  int deg = g.degree(v);
  int e2 = emb.rot[v][(i + 1) % deg];
  return side_of(e2, g.edges[e2].u != v);
}

FaceSet faces_of_unchecked(const Graph& g, const PlanarEmbedding& emb) {
  FaceSet fs;
  fs.face_of_side.assign(2 * g.m(), -1);
  for (int s0 = 0; s0 < 2 * g.m(); ++s0) {
    if (fs.face_of_side[s0] >= 0) continue;
    int f = fs.size();
    fs.faces.emplace_back();
    int s = s0;
    do {
      fs.face_of_side[s] = f;
      fs.faces[f].push_back(s);
      s = next_side(g, emb, s);
    } while (s != s0);
  }
  return fs;
}

namespace {

// Euler check per connected component: n_c - m_c + f_c = 2, where f_c counts
// distinct faces touched by the component (a face may be shared only within a
// component).
bool euler_ok(const Graph& g, const FaceSet& fs) {
  if (g.n == 0) return true;
  std::vector<int> comp(g.n, -1);
  int ncomp = 0;
  for (int v0 = 0; v0 < g.n; ++v0) {
    if (comp[v0] >= 0) continue;
    int c = ncomp++;
    std::vector<int> stack{v0};
    comp[v0] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.adj[v]) {
        int w = g.other(e, v);
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<int> nv(ncomp, 0), ne(ncomp, 0), nf(ncomp, 0);
  for (int v = 0; v < g.n; ++v) ++nv[comp[v]];
  for (const auto& e : g.edges) ++ne[comp[e.u]];
  std::vector<int> face_comp(fs.size(), -1);
  for (int f = 0; f < fs.size(); ++f)
    if (!fs.faces[f].empty()) face_comp[f] = comp[side_from(g, fs.faces[f][0])];
  for (int f = 0; f < fs.size(); ++f)
    if (face_comp[f] >= 0) ++nf[face_comp[f]];
  for (int c = 0; c < ncomp; ++c) {
    if (nv[c] == 1 && ne[c] == 0) continue;  // isolated vertex has no sides
    if (nv[c] - ne[c] + nf[c] != 2) return false;
  }
  return true;
}

}  // namespace

bool rotation_is_planar(const Graph& g, const PlanarEmbedding& emb) {
  FaceSet fs = faces_of_unchecked(g, emb);
  return euler_ok(g, fs);
}

FaceSet faces_of(const Graph& g, const PlanarEmbedding& emb) {
  FaceSet fs = faces_of_unchecked(g, emb);
  if (!euler_ok(g, fs)) fail(errc::non_planar_rotation, "rotation system is not planar");
  return fs;
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property, boost::property<boost::edge_index_t, int>>;

}  // namespace

bool is_planar(const Graph& g) {
  BoostGraph bg(g.n);
  for (int e = 0; e < g.m(); ++e)
    boost::add_edge(g.edges[e].u, g.edges[e].v, e, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

PlanarEmbedding planar_embed(const Graph& g) {
  BoostGraph bg(g.n);
  for (int e = 0; e < g.m(); ++e)
    boost::add_edge(g.edges[e].u, g.edges[e].v, e, bg);
  using Emb = std::vector<std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>>;
  Emb order(g.n);
  auto pm = boost::make_iterator_property_map(order.begin(), boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = pm))
    fail(errc::not_planar, "graph is not planar");
  PlanarEmbedding emb;
  emb.rot.resize(g.n);
  auto eidx = boost::get(boost::edge_index, bg);
  for (int v = 0; v < g.n; ++v)
    for (auto ed : order[v]) emb.rot[v].push_back(boost::get(eidx, ed));
  emb.external_face = 0;
  return emb;
}

}  // namespace orthobend
