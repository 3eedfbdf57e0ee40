#include "orthobend/legged.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orthobend {

DualAdjacency dual_adjacency(const Graph& g, const FaceSet& fs) {
  DualAdjacency d;
  d.nfaces = fs.size();
  std::map<std::pair<int, int>, std::vector<int>> shared;
  for (int e = 0; e < g.m(); ++e) {
    int f1 = fs.face_of_side[side_of(e, false)];
    int f2 = fs.face_of_side[side_of(e, true)];
    if (f1 == f2) continue;
    shared[std::minmax(f1, f2)].push_back(e);
  }
  d.nbr.resize(fs.size());
  for (auto& [key, edges] : shared) {
    d.nbr[key.first].push_back({key.second, edges});
    d.nbr[key.second].push_back({key.first, edges});
  }
  return d;
}

namespace {

// Candidate edge cuts of size 2 or 3 = simple dual cycles of that length,
// with one shared edge chosen per dual adjacency.
std::vector<std::vector<int>> candidate_cuts(const DualAdjacency& d, int k) {
  std::vector<std::vector<int>> cuts;
  if (k == 2) {
    for (int f = 0; f < d.nfaces; ++f)
      for (const auto& [h, edges] : d.nbr[f]) {
        if (h < f || edges.size() < 2) continue;
        for (size_t i = 0; i < edges.size(); ++i)
          for (size_t j = i + 1; j < edges.size(); ++j)
            cuts.push_back({edges[i], edges[j]});
      }
  } else {
    for (int f1 = 0; f1 < d.nfaces; ++f1)
      for (const auto& [f2, e12] : d.nbr[f1]) {
        if (f2 <= f1) continue;
        for (const auto& [f3, e23] : d.nbr[f2]) {
          if (f3 <= f2) continue;
          const std::vector<int>* e13 = nullptr;
          for (const auto& [h, eds] : d.nbr[f1])
            if (h == f3) e13 = &eds;
          if (!e13) continue;
          for (int a : e12)
            for (int b : e23)
              for (int c : *e13) cuts.push_back({a, b, c});
        }
      }
  }
  return cuts;
}

struct SideSplit {
  bool ok = false;
  std::vector<int> side_a, side_b;  // vertex sets of the two components
};

SideSplit split_by_cut(const Graph& g, const std::vector<int>& cut) {
  SideSplit s;
  std::vector<char> is_cut(g.m(), 0);
  for (int e : cut) is_cut[e] = 1;
  std::vector<int> comp(g.n, -1);
  int ncomp = 0;
  for (int v0 = 0; v0 < g.n; ++v0) {
    if (comp[v0] >= 0) continue;
    if (ncomp == 2) return s;  // more than two components: not a minimal cut
    std::vector<int> stack{v0};
    comp[v0] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.adj[v]) {
        if (is_cut[e]) continue;
        int w = g.other(e, v);
        if (comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  if (ncomp != 2) return s;
  for (int e : cut)
    if (comp[g.edges[e].u] == comp[g.edges[e].v]) return s;  // not a cut edge
  s.ok = true;
  for (int v = 0; v < g.n; ++v) (comp[v] == 0 ? s.side_a : s.side_b).push_back(v);
  return s;
}

// Tries to interpret vertex set A as the region of a legged cycle whose legs
// are exactly `cut`. Returns an empty optional-like flag via ok.
struct RegionCycle {
  bool ok = false;
  LeggedCycle cycle;
};

RegionCycle region_cycle(const Graph& g, const PlanarEmbedding& emb, const FaceSet& fs,
                         const std::vector<int>& A, const std::vector<int>& cut) {
  RegionCycle out;
  std::vector<char> in_a(g.n, 0);
  for (int v : A) in_a[v] = 1;
  if (A.size() < 3) return out;

  // Induced subgraph with inherited rotations.
  std::vector<char> cut_edge(g.m(), 0);
  for (int e : cut) cut_edge[e] = 1;
  std::vector<int> e_local(g.m(), -1);
  Graph h;
  std::vector<int> v_local(g.n, -1), v_back;
  for (int v : A) {
    v_local[v] = h.add_vertex(g.tag[v]);
    v_back.push_back(v);
  }
  for (int e = 0; e < g.m(); ++e) {
    if (cut_edge[e]) continue;
    if (in_a[g.edges[e].u] && in_a[g.edges[e].v])
      e_local[e] = h.add_edge(v_local[g.edges[e].u], v_local[g.edges[e].v]);
  }
  PlanarEmbedding hemb;
  hemb.rot.resize(h.n);
  for (int v : A)
    for (int e : emb.rot[v])
      if (e_local[e] >= 0) hemb.rot[v_local[v]].push_back(e_local[e]);
  FaceSet hfs = faces_of_unchecked(h, hemb);

  // Every leg must poke into one common face of the induced subgraph; that
  // face walk is the candidate boundary cycle.
  int fstar = -1;
  for (int e : cut) {
    int x = in_a[g.edges[e].u] ? g.edges[e].u : g.edges[e].v;
    if (!in_a[x] || in_a[g.other(e, x)]) return out;
    int deg = g.degree(x);
    int i = rot_index(emb, x, e);
    int enext = -1;
    for (int step = 1; step < deg; ++step) {
      int cand = emb.rot[x][(i + step) % deg];
      if (e_local[cand] >= 0) {
        enext = cand;
        break;
      }
    }
    if (enext < 0) return out;  // leg vertex with no cycle edge
    int s = side_of(e_local[enext], h.edges[e_local[enext]].u != v_local[x]);
    int f = hfs.face_of_side[s];
    if (fstar < 0) fstar = f;
    if (f != fstar) return out;
  }
  if (fstar < 0) return out;

  // The external face of g must lie on the same side as the legs.
  int fo = emb.external_face;
  for (int s : fs.faces[fo]) {
    int e = side_edge(s);
    if (e_local[e] >= 0) {
      int hs = side_of(e_local[e], (s & 1) != 0);
      if (hfs.face_of_side[hs] != fstar) return out;
      break;
    }
  }

  // Boundary walk must be a simple cycle covering all leg vertices.
  const auto& walk = hfs.faces[fstar];
  std::vector<char> seen(h.n, 0);
  LeggedCycle c;
  for (int s : walk) {
    int from = side_from(h, s);
    if (seen[from]) return out;
    seen[from] = 1;
    c.cycle_vertices.push_back(v_back[from]);
    c.cycle_edges.push_back(-1);  // filled below
  }
  std::map<std::pair<int, int>, int> gedge;
  for (int e = 0; e < g.m(); ++e) gedge[std::minmax(g.edges[e].u, g.edges[e].v)] = e;
  int len = static_cast<int>(c.cycle_vertices.size());
  if (len < 3) return out;
  for (int i = 0; i < len; ++i) {
    auto it = gedge.find(std::minmax(c.cycle_vertices[i], c.cycle_vertices[(i + 1) % len]));
    if (it == gedge.end()) return out;
    c.cycle_edges[i] = it->second;
  }
  std::vector<char> on_cycle(g.n, 0);
  for (int v : c.cycle_vertices) on_cycle[v] = 1;
  for (int e : cut) {
    int x = in_a[g.edges[e].u] ? g.edges[e].u : g.edges[e].v;
    if (!on_cycle[x]) return out;
    c.legs.push_back(e);
    c.leg_vertices.push_back(x);
  }
  c.region_vertices = A;
  std::sort(c.region_vertices.begin(), c.region_vertices.end());
  out.ok = true;
  out.cycle = std::move(c);
  return out;
}

}  // namespace

std::vector<LeggedCycle> legged_cycles(const Graph& g, const PlanarEmbedding& emb, int k) {
  if (k != 2 && k != 3) fail(errc::bad_input, "legged_cycles supports k in {2,3}");
  FaceSet fs = faces_of(g, emb);
  DualAdjacency dual = dual_adjacency(g, fs);
  std::vector<LeggedCycle> result;
  std::set<std::vector<int>> seen_edge_sets;
  for (auto& cut : candidate_cuts(dual, k)) {
    SideSplit split = split_by_cut(g, cut);
    if (!split.ok) continue;
    for (const auto& side : {split.side_a, split.side_b}) {
      RegionCycle rc = region_cycle(g, emb, fs, side, cut);
      if (!rc.ok) continue;
      std::vector<int> key = rc.cycle.cycle_edges;
      std::sort(key.begin(), key.end());
      if (seen_edge_sets.insert(key).second) result.push_back(std::move(rc.cycle));
    }
  }
  std::sort(result.begin(), result.end(), [](const LeggedCycle& a, const LeggedCycle& b) {
    auto ka = a.cycle_edges, kb = b.cycle_edges;
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka < kb;
  });
  return result;
}

bool is_bad_cycle(const Graph& g, const LeggedCycle& c) {
  int deg2 = 0;
  for (int v : c.cycle_vertices)
    if (g.degree(v) == 2) ++deg2;
  if (c.k() == 2) return deg2 < 2;
  if (c.k() == 3) return deg2 < 1;
  return false;
}

}  // namespace orthobend
