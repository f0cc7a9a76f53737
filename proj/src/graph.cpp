#include "tdmsd/graph.hpp"

#include <algorithm>
#include <string>

#include "tdmsd/error.hpp"

namespace tdmsd {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for (Vertex v : *this) {
    if (!first_member) out += ',';
    out += std::to_string(v);
    first_member = false;
  }
  out += '}';
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  auto va = a.to_vector();
  auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b && a >= 0 && a < n) {
      throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(a));
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                                  ") on " + std::to_string(n) + " vertices");
    }
    normalized.emplace_back(a, b);
  }
  return from_edges(n, normalized);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex count " + std::to_string(n) + " outside 1..64");
  }
  Graph g;
  g.adj_.assign(n, VertexSet{});
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) {
      throw Error(ErrorCode::IndexOutOfRange, "edge endpoint outside 0.." + std::to_string(n - 1));
    }
    if (!g.adj_[e.u].contains(e.v)) {
      g.adj_[e.u].insert(e.v);
      g.adj_[e.v].insert(e.u);
      ++g.m_;
    }
  }
  return g;
}

VertexSet Graph::neighbors(VertexSet s) const {
  VertexSet out;
  for (Vertex v : s) out |= adj_[v];
  return out;
}

VertexSet Graph::closed_neighbors(VertexSet s) const { return neighbors(s) | s; }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> moved;
  moved.reserve(m_);
  for (const Edge& e : edges()) moved.emplace_back(perm[e.u], perm[e.v]);
  return from_edges(order(), moved);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  dist[source] = 0;
  VertexSet frontier = VertexSet::singleton(source);
  VertexSet seen = frontier;
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next = g.neighbors(frontier) - seen;
    for (Vertex v : next) dist[v] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  VertexSet seen = VertexSet::singleton(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    frontier = g.neighbors(frontier) - seen;
    seen |= frontier;
  }
  return seen == g.vertices();
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

bool is_star(const Graph& g) {
  int n = g.order();
  if (n < 2 || g.size() != n - 1) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return true;
  }
  return false;
}

VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.insert(v);
  }
  return out;
}

VertexSet support_vertices(const Graph& g) { return g.neighbors(leaves(g)); }

VertexSet universal_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) out.insert(v);
  }
  return out;
}

bool is_inner_edge(const Graph& g, const Edge& e) {
  return g.has_edge(e) && g.degree(e.u) != 1 && g.degree(e.v) != 1;
}

StructureProfile structure_profile(const Graph& g) {
  StructureProfile p;
  p.is_connected = is_connected(g);
  p.is_tree = p.is_connected && g.size() == g.order() - 1;
  p.is_star = is_star(g);
  p.leaves = leaves(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    int leaf_neighbors = (g.neighbors(v) & p.leaves).size();
    if (leaf_neighbors >= 1) p.supports.insert(v);
    if (leaf_neighbors >= 2) p.strong_supports.insert(v);
  }
  for (const Edge& e : g.edges()) {
    if (p.leaves.contains(e.u) || p.leaves.contains(e.v)) {
      p.pendant_edges.push_back(e);
    } else {
      p.inner_edges.push_back(e);
    }
  }
  if (p.is_connected) {
    int diam = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      auto dist = bfs_distances(g, v);
      diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
    }
    p.diameter = diam;
  }
  return p;
}

Graph subdivide(const Graph& g, const Edge& e, int t) {
  if (!g.has_edge(e)) {
    throw Error(ErrorCode::EdgeNotPresent,
                "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  if (t < 1) throw Error(ErrorCode::OutOfRange, "subdivision count must be positive");
  int n = g.order();
  if (n + t > kMaxVertices) throw Error(ErrorCode::TooLarge, "subdivided graph exceeds 64 vertices");
  std::vector<Edge> edges;
  edges.reserve(g.size() + t);
  for (const Edge& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  Vertex prev = e.u;
  for (int i = 0; i < t; ++i) {
    edges.emplace_back(prev, n + i);
    prev = n + i;
  }
  edges.emplace_back(prev, e.v);
  return Graph::from_edges(n + t, edges);
}

Graph subdivide_each_once(const Graph& g, std::span<const Edge> to_split) {
  int n = g.order();
  int t = static_cast<int>(to_split.size());
  if (n + t > kMaxVertices) throw Error(ErrorCode::TooLarge, "subdivided graph exceeds 64 vertices");
  std::vector<Edge> all = g.edges();
  std::vector<Edge> out;
  out.reserve(all.size() + to_split.size());
  for (const Edge& e : to_split) {
    if (!g.has_edge(e)) {
      throw Error(ErrorCode::EdgeNotPresent,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }
  for (const Edge& f : all) {
    if (std::find(to_split.begin(), to_split.end(), f) == to_split.end()) out.push_back(f);
  }
  for (int i = 0; i < t; ++i) {
    out.emplace_back(to_split[i].u, n + i);
    out.emplace_back(n + i, to_split[i].v);
  }
  if (static_cast<int>(out.size()) != g.size() + t) {
    throw Error(ErrorCode::EdgeNotPresent, "edge listed twice for subdivision");
  }
  return Graph::from_edges(n + t, out);
}

VertexSet private_neighborhood(const Graph& g, Vertex u, VertexSet d) {
  if (!d.contains(u)) throw Error(ErrorCode::NotInSet, "vertex " + std::to_string(u) + " not in set");
  VertexSet rest = d;
  rest.erase(u);
  return g.closed_neighbors(u) - g.closed_neighbors(rest);
}

namespace {

Vertex farthest_lowest(const std::vector<int>& dist) {
  Vertex best = 0;
  for (Vertex v = 1; v < static_cast<Vertex>(dist.size()); ++v) {
    if (dist[v] > dist[best]) best = v;
  }
  return best;
}

std::vector<Vertex> tree_path(const Graph& tree, Vertex from, Vertex to) {
  // Walk back from `to` along strictly decreasing distance from `from`.
  auto dist = bfs_distances(tree, from);
  std::vector<Vertex> path{to};
  Vertex cur = to;
  while (cur != from) {
    for (Vertex w : tree.neighbors(cur)) {
      if (dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<Vertex> longest_path(const Graph& tree) {
  if (!is_tree(tree)) throw Error(ErrorCode::NotATree, "longest_path needs a tree");
  Vertex a = farthest_lowest(bfs_distances(tree, 0));
  Vertex b = farthest_lowest(bfs_distances(tree, a));
  return tree_path(tree, std::min(a, b), std::max(a, b));
}

std::vector<std::vector<Vertex>> all_longest_paths(const Graph& tree) {
  if (!is_tree(tree)) throw Error(ErrorCode::NotATree, "all_longest_paths needs a tree");
  int n = tree.order();
  std::vector<std::vector<int>> dist(n);
  int diam = 0;
  for (Vertex v = 0; v < n; ++v) {
    dist[v] = bfs_distances(tree, v);
    diam = std::max(diam, *std::max_element(dist[v].begin(), dist[v].end()));
  }
  std::vector<std::vector<Vertex>> out;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (dist[a][b] == diam) out.push_back(tree_path(tree, a, b));
    }
  }
  return out;
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::OutOfRange, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

Graph star_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n, edges);
}

Graph wheel_graph(int n) {
  if (n < 4) throw Error(ErrorCode::OutOfRange, "wheel needs at least 4 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i == n - 1 ? 1 : i + 1);
  }
  return Graph::from_edges(n, edges);
}

Graph gstar_graph() {
  return Graph::from_edge_list(12, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 6}, {6, 7},
                                    {7, 3}, {1, 8}, {8, 9}, {9, 4}, {2, 10}, {10, 11}, {11, 5}});
}

}  // namespace tdmsd
