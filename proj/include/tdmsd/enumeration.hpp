#pragma once

#include <string>
#include <vector>

#include "tdmsd/graph.hpp"

namespace tdmsd {

enum class StreamSource { GeneratedTrees, GeneratedConnected, File };

/// A materialized stream of graphs of one order. Generated streams hold one
/// representative per isomorphism class, in ascending canonical-code order.
struct GraphStream {
  int order = 0;
  StreamSource source = StreamSource::File;
  std::vector<Graph> graphs;

  auto begin() const { return graphs.begin(); }
  auto end() const { return graphs.end(); }
  std::size_t size() const { return graphs.size(); }
};

/// Largest order generated from Prüfer sequences; larger orders extend the
/// previous order's trees by one leaf.
inline constexpr int kPruferMaxOrder = 8;

/// All free trees of order n, 1 <= n <= 16. Throws OutOfRange.
GraphStream enumerate_trees(int n);

/// Free trees of order n by decoding all n^(n-2) Prüfer sequences.
/// Throws OutOfRange outside 1..10.
std::vector<Graph> trees_by_prufer(int n);
/// Free trees of order n by attaching a leaf to every vertex of every free
/// tree of order n - 1. Throws OutOfRange outside 1..16.
std::vector<Graph> trees_by_leaf_extension(int n);

/// Labeled tree of a Prüfer sequence over 0..n-1 (n = seq.size() + 2).
Graph tree_from_prufer(const std::vector<int>& seq);

/// All connected graphs of order n, 1 <= n <= 7, one per isomorphism class.
/// Throws OutOfRange.
GraphStream enumerate_connected_graphs(int n);

}  // namespace tdmsd
