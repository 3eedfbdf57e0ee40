#include "orthobend/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace orthobend {

const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::self_loop: return "SelfLoop";
    case errc::degree_exceeded: return "DegreeExceeded";
    case errc::dangling_index: return "DanglingIndex";
    case errc::non_planar_rotation: return "NonPlanarRotation";
    case errc::not_planar: return "NotPlanar";
    case errc::not_biconnected: return "NotBiconnected";
    case errc::disconnected: return "Disconnected";
    case errc::smooth_would_create_multi_edge: return "SmoothWouldCreateMultiEdge";
    case errc::path_not_in_graph: return "PathNotInGraph";
    case errc::paths_disagree: return "PathsDisagree";
    case errc::unclassified_shape: return "UnclassifiedShape";
    case errc::root_has_no_pertinent: return "RootHasNoPertinent";
    case errc::malformed_p_node: return "MalformedPNode";
    case errc::malformed_s_node: return "MalformedSNode";
    case errc::malformed_r_node: return "MalformedRNode";
    case errc::no_rectangular_drawing: return "NoRectangularDrawing";
    case errc::conditions_violated: return "ConditionsViolated";
    case errc::not_equivalent: return "NotEquivalent";
    case errc::orientation_unresolvable: return "OrientationUnresolvable";
    case errc::invalid_representation: return "InvalidRepresentation";
    case errc::isolated_vertex: return "IsolatedVertex";
    case errc::too_large: return "TooLarge";
    case errc::not_planar_embedding: return "NotPlanarEmbedding";
    case errc::bad_input: return "BadInput";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
  if (n < 0) fail(errc::bad_input, "negative vertex count");
  Graph g;
  g.n = n;
  g.adj.resize(n);
  g.tag.assign(n, VertexTag::none);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n || v >= n) fail(errc::dangling_index, "edge endpoint out of range");
    if (u == v) fail(errc::self_loop, "self-loop rejected");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) fail(errc::duplicate_edge, "parallel edge rejected");
    g.add_edge(u, v);
    if (g.degree(u) > 3 || g.degree(v) > 3) fail(errc::degree_exceeded, "vertex degree exceeds 3");
  }
  return g;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : g.adj[v]) {
      int w = g.other(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.n;
}

namespace {

// Iterative DFS computing blocks and cut vertices.
struct BlockDfs {
  const Graph& g;
  std::vector<int> depth, low, parent_edge;
  std::vector<char> visited;
  std::vector<int> edge_stack;
  BlockCutTree out;

  explicit BlockDfs(const Graph& g)
      : g(g), depth(g.n, -1), low(g.n, 0), parent_edge(g.n, -1), visited(g.n, 0) {
    out.is_cut.assign(g.n, 0);
  }

  void pop_block(int until_edge) {
    std::vector<int> block;
    while (true) {
      int e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e);
      if (e == until_edge) break;
    }
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }

  void run(int root) {
    struct Frame {
      int v;
      size_t i;
    };
    std::vector<Frame> st{{root, 0}};
    depth[root] = 0;
    low[root] = 0;
    visited[root] = 1;
    int root_children = 0;
    while (!st.empty()) {
      auto& [v, i] = st.back();
      if (i < g.adj[v].size()) {
        int e = g.adj[v][i++];
        if (e == parent_edge[v]) continue;
        int w = g.other(e, v);
        if (!visited[w]) {
          visited[w] = 1;
          depth[w] = depth[v] + 1;
          low[w] = depth[w];
          parent_edge[w] = e;
          edge_stack.push_back(e);
          if (v == root) ++root_children;
          st.push_back({w, 0});
        } else if (depth[w] < depth[v]) {
          edge_stack.push_back(e);
          low[v] = std::min(low[v], depth[w]);
        }
      } else {
        st.pop_back();
        if (!st.empty()) {
          int p = st.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= depth[p]) {
            if (p != root) out.is_cut[p] = 1;
            pop_block(parent_edge[v]);
          }
        }
      }
    }
    if (root_children > 1) out.is_cut[root] = 1;
  }
};

}  // namespace

BlockCutTree block_cut_tree(const Graph& g) {
  if (!is_connected(g)) fail(errc::disconnected, "block-cut tree needs a connected graph");
  BlockDfs dfs(g);
  if (g.n > 0) dfs.run(0);
  BlockCutTree bct = std::move(dfs.out);
  for (int v = 0; v < g.n; ++v)
    if (bct.is_cut[v]) bct.cut_vertices.push_back(v);
  bct.block_cuts.resize(bct.blocks.size());
  for (size_t b = 0; b < bct.blocks.size(); ++b) {
    std::set<int> cuts;
    for (int e : bct.blocks[b]) {
      if (bct.is_cut[g.edges[e].u]) cuts.insert(g.edges[e].u);
      if (bct.is_cut[g.edges[e].v]) cuts.insert(g.edges[e].v);
    }
    bct.block_cuts[b].assign(cuts.begin(), cuts.end());
  }
  return bct;
}

bool is_biconnected(const Graph& g) {
  if (g.n <= 1) return true;
  if (g.n == 2) return g.m() >= 1;
  if (!is_connected(g)) return false;
  BlockCutTree bct = block_cut_tree(g);
  return bct.blocks.size() == 1;
}

std::pair<Graph, int> subdivide(const Graph& g, int e, VertexTag t) {
  if (e < 0 || e >= g.m()) fail(errc::dangling_index, "subdivide: no such edge");
  Graph h = g;
  int w = h.add_vertex(t);
  int u = h.edges[e].u, v = h.edges[e].v;
  // Reuse slot e for (u,w) so u's rotation is untouched; append (w,v) and
  // splice it into v's rotation where e was.
  h.edges[e] = {u, w};
  int e2 = static_cast<int>(h.edges.size());
  h.edges.push_back({w, v});
  h.adj[w] = {e, e2};
  for (int& id : h.adj[v])
    if (id == e) id = e2;
  return {h, w};
}

Graph smooth(const Graph& g, int w) {
  if (w < 0 || w >= g.n || g.degree(w) != 2) fail(errc::bad_input, "smooth needs a degree-2 vertex");
  int e1 = g.adj[w][0], e2 = g.adj[w][1];
  int u = g.other(e1, w), v = g.other(e2, w);
  if (u == v || g.edge_between(u, v) >= 0)
    fail(errc::smooth_would_create_multi_edge, "smoothing would create a multi-edge");
  Graph h;
  h.n = g.n - 1;
  h.adj.resize(h.n);
  h.tag.reserve(h.n);
  std::vector<int> vmap(g.n);
  for (int x = 0, y = 0; x < g.n; ++x) {
    if (x == w) continue;
    vmap[x] = y++;
    h.tag.push_back(g.tag[x]);
  }
  std::vector<int> emap(g.m(), -1);
  for (int e = 0; e < g.m(); ++e) {
    if (e == e1 || e == e2) continue;
    emap[e] = static_cast<int>(h.edges.size());
    h.edges.push_back({vmap[g.edges[e].u], vmap[g.edges[e].v]});
  }
  int joined = static_cast<int>(h.edges.size());
  h.edges.push_back({vmap[u], vmap[v]});
  emap[e1] = emap[e2] = joined;
  for (int x = 0; x < g.n; ++x) {
    if (x == w) continue;
    for (int e : g.adj[x]) h.adj[vmap[x]].push_back(emap[e]);
  }
  return h;
}

std::pair<Graph, std::vector<int>> edge_subgraph(const Graph& g, const std::vector<int>& edge_ids) {
  std::vector<int> vmap(g.n, -1);
  std::vector<int> back;
  Graph h;
  auto local = [&](int v) {
    if (vmap[v] < 0) {
      vmap[v] = h.add_vertex(g.tag[v]);
      back.push_back(v);
    }
    return vmap[v];
  };
  for (int e : edge_ids) {
    int u = local(g.edges[e].u), v = local(g.edges[e].v);
    h.add_edge(u, v);
  }
  return {h, back};
}

}  // namespace orthobend
