#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "tdmsd/graph.hpp"

namespace tdmsd {

inline constexpr int kDefaultCanonicalCap = 16;

/// Byte string equal for two graphs iff they are isomorphic.
///
/// Trees get a center-rooted AHU encoding. Other graphs get the adjacency
/// bit string of the lexicographically largest labeling reachable by
/// colour refinement plus individualization, where the initial colours are
/// (degree, sorted neighbour degrees, distance multiset). Codes of trees and
/// non-trees never collide: the first byte records which path produced it.
///
/// Throws TooLarge when the order exceeds `cap`.
std::string canonical_code(const Graph& g, int cap = kDefaultCanonicalCap);

/// Isomorphism code of a tree whose vertices carry colours; two coloured trees
/// get equal codes iff some isomorphism preserves the colours. Throws
/// NotATree. `colors` holds one small integer per vertex.
std::string colored_tree_code(const Graph& tree, std::span<const int> colors);

/// Hex rendering for logs and JSON.
std::string to_hex(const std::string& bytes);

}  // namespace tdmsd
