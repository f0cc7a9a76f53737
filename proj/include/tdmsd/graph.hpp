#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tdmsd/vertex_set.hpp"

namespace tdmsd {

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  /// Normalizes the endpoint order.
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
/// Immutable once built; use from_edge_list or the subdivision functions.
class Graph {
public:
  Graph() = default;

  /// Builds a simple graph. Duplicate pairs collapse to one edge.
  /// Throws IndexOutOfRange for an endpoint >= n (or n outside 1..64) and
  /// LoopEdge for a pair (x, x).
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return m_; }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighbors(Vertex v) const { return adj_[v] | VertexSet::singleton(v); }
  /// Union of open neighborhoods of the members of s.
  VertexSet neighbors(VertexSet s) const;
  /// Union of closed neighborhoods of the members of s.
  VertexSet closed_neighbors(VertexSet s) const;
  int degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex a, Vertex b) const { return adj_[a].contains(b); }
  bool has_edge(const Edge& e) const {
    return e.u >= 0 && e.v < order() && e.u != e.v && adj_[e.u].contains(e.v);
  }

  /// All edges in ascending normalized order.
  std::vector<Edge> edges() const;

  /// Relabels vertex v as perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<VertexSet> adj_;
  int m_ = 0;
};

/// Structural summary used across the theorem predicates.
struct StructureProfile {
  bool is_connected = false;
  bool is_tree = false;
  bool is_star = false;
  VertexSet leaves;
  VertexSet supports;
  VertexSet strong_supports;
  std::vector<Edge> pendant_edges;
  std::vector<Edge> inner_edges;
  /// Empty when the graph is disconnected.
  std::optional<int> diameter;
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// K_{1,n-1} with n >= 2 (K2 counts as a star).
bool is_star(const Graph& g);
VertexSet leaves(const Graph& g);
VertexSet support_vertices(const Graph& g);
/// Vertices adjacent to every other vertex.
VertexSet universal_vertices(const Graph& g);
bool is_inner_edge(const Graph& g, const Edge& e);

/// Breadth-first distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

StructureProfile structure_profile(const Graph& g);

/// Replaces edge e = uv by the path u, x1, ..., xt, v. The new vertices get
/// indices n..n+t-1 in path order starting next to e.u.
/// Throws EdgeNotPresent, OutOfRange for t < 1, TooLarge past 64 vertices.
Graph subdivide(const Graph& g, const Edge& e, int t);

/// Subdivides every edge of `edges` exactly once, simultaneously. Subdivision
/// vertices are appended in the order the edges are listed.
Graph subdivide_each_once(const Graph& g, std::span<const Edge> edges);

/// PN[u, D] = N[u] - N[D - {u}]. Throws NotInSet when u is not in d.
VertexSet private_neighborhood(const Graph& g, Vertex u, VertexSet d);

/// One longest path v0..vl found by double breadth-first search, lowest
/// index winning every distance tie. Requires a tree.
std::vector<Vertex> longest_path(const Graph& tree);

/// Every longest path of a tree, each listed once from its lower endpoint.
std::vector<std::vector<Vertex>> all_longest_paths(const Graph& tree);

// Named graph families used throughout the tests and the CLI.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,n-1}, center 0.
Graph star_graph(int n);
/// W_n on n vertices: hub 0 joined to the cycle 1..n-1.
Graph wheel_graph(int n);
/// The 12-vertex graph with msd = 3 and sd = 2 (two triangles joined by three
/// paths with two internal vertices each).
Graph gstar_graph();

}  // namespace tdmsd
