#include "tdmsd/enumeration.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tdmsd/canonical.hpp"
#include "tdmsd/error.hpp"

namespace tdmsd {

namespace {

// Ascending canonical code, one graph per code.
using ClassMap = std::map<std::string, Graph>;

std::vector<Graph> values(ClassMap&& classes) {
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

void require_order(int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw Error(ErrorCode::OutOfRange,
                "order " + std::to_string(n) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  }
}

std::vector<Graph> extend_by_leaf(const std::vector<Graph>& smaller) {
  ClassMap classes;
  for (const Graph& t : smaller) {
    int n = t.order();
    auto edges = t.edges();
    for (Vertex anchor = 0; anchor < n; ++anchor) {
      auto grown = edges;
      grown.emplace_back(anchor, n);
      Graph g = Graph::from_edges(n + 1, grown);
      classes.try_emplace(canonical_code(g), std::move(g));
    }
  }
  return values(std::move(classes));
}

}  // namespace

Graph tree_from_prufer(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw Error(ErrorCode::OutOfRange, "Prüfer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int x : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  Vertex a = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
        break;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> trees_by_prufer(int n) {
  require_order(n, 1, 10);
  if (n == 1) return {Graph::from_edges(1, {})};
  if (n == 2) return {path_graph(2)};
  ClassMap classes;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    Graph t = tree_from_prufer(seq);
    classes.try_emplace(canonical_code(t), std::move(t));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return values(std::move(classes));
}

std::vector<Graph> trees_by_leaf_extension(int n) {
  require_order(n, 1, 16);
  std::vector<Graph> level{Graph::from_edges(1, {})};
  for (int k = 2; k <= n; ++k) level = extend_by_leaf(level);
  return level;
}

GraphStream enumerate_trees(int n) {
  require_order(n, 1, 16);
  GraphStream s{n, StreamSource::GeneratedTrees, {}};
  if (n <= kPruferMaxOrder) {
    s.graphs = trees_by_prufer(n);
    return s;
  }
  std::vector<Graph> level = trees_by_prufer(kPruferMaxOrder);
  for (int k = kPruferMaxOrder + 1; k <= n; ++k) level = extend_by_leaf(level);
  s.graphs = std::move(level);
  return s;
}

GraphStream enumerate_connected_graphs(int n) {
  require_order(n, 2, 7);
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  int p = static_cast<int>(pairs.size());
  ClassMap classes;
  std::vector<Edge> chosen;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p); ++mask) {
    // Every class has a labeling with non-increasing degrees; skipping the
    // other labelings leaves the set of classes unchanged.
    int degree[8] = {};
    for (int b = 0; b < p; ++b) {
      if ((mask >> b) & 1U) {
        ++degree[pairs[b].u];
        ++degree[pairs[b].v];
      }
    }
    bool sorted = true;
    for (int v = 1; v < n && sorted; ++v) sorted = degree[v - 1] >= degree[v] && degree[v] > 0;
    if (!sorted || degree[0] == 0) continue;
    chosen.clear();
    for (int b = 0; b < p; ++b) {
      if ((mask >> b) & 1U) chosen.push_back(pairs[b]);
    }
    Graph g = Graph::from_edges(n, chosen);
    if (!is_connected(g)) continue;
    classes.try_emplace(canonical_code(g), std::move(g));
  }
  return {n, StreamSource::GeneratedConnected, values(std::move(classes))};
}

}  // namespace tdmsd
