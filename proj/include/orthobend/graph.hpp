#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orthobend/base.hpp"

namespace orthobend {

// Provenance of degree-2 helper vertices, so rectilinear images can be
// inverted unambiguously.
enum class VertexTag : std::uint8_t { none, subdivision, bend, corner };

struct Edge {
  int u = -1;
  int v = -1;
};

// Simple undirected graph, max degree 3. Adjacency lists hold edge ids; their
// order doubles as the rotation system once the graph is embedded.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj;
  std::vector<VertexTag> tag;

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int other(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }
  bool is_endpoint(int e, int v) const { return edges[e].u == v || edges[e].v == v; }

  // Returns the edge id joining u and v, or -1.
  int edge_between(int u, int v) const {
    for (int e : adj[u])
      if (other(e, u) == v) return e;
    return -1;
  }

  int add_vertex(VertexTag t = VertexTag::none) {
    adj.emplace_back();
    tag.push_back(t);
    return n++;
  }

  // Appends an edge without simplicity/degree checks; callers validate.
  int add_edge(int u, int v) {
    int e = m();
    edges.push_back({u, v});
    adj[u].push_back(e);
    adj[v].push_back(e);
    return e;
  }
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

bool is_connected(const Graph& g);
bool is_biconnected(const Graph& g);

// Inserts a dummy vertex on edge e; returns (new graph, new vertex id).
// The two replacement edges keep e's position in the endpoint rotations, so
// an embedded graph stays embedded.
std::pair<Graph, int> subdivide(const Graph& g, int e, VertexTag t = VertexTag::subdivision);

// Removes a degree-2 vertex w, joining its neighbors. Inverse of subdivide.
Graph smooth(const Graph& g, int w);

struct BlockCutTree {
  // Each block is a set of edge ids of g; trivial blocks are single edges.
  std::vector<std::vector<int>> blocks;
  std::vector<int> cut_vertices;
  std::vector<char> is_cut;             // per vertex of g
  std::vector<std::vector<int>> block_cuts;  // per block: incident cut vertices
  bool block_is_trivial(int b) const { return blocks[b].size() == 1; }
};

BlockCutTree block_cut_tree(const Graph& g);

// Extracts the subgraph induced by the given edges; returns the subgraph and
// the local->global vertex id map.
std::pair<Graph, std::vector<int>> edge_subgraph(const Graph& g, const std::vector<int>& edge_ids);

}  // namespace orthobend
