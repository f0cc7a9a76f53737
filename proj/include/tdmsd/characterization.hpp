#pragma once

#include <optional>
#include <vector>

#include "tdmsd/graph.hpp"

namespace tdmsd {

struct EdgeConditionReport {
  Edge edge;
  bool holds = true;
  /// A γt-set violating the condition; present iff !holds.
  std::optional<VertexSet> failing_set;
};

/// Which branch of the sd_γt(T) = 1 test fired.
struct SdOneVerdict {
  bool predicts_one = false;
  std::optional<Vertex> leaf;
  std::optional<Edge> inner_edge;
};

/// The inner-edge condition for one γt-set D. With both endpoints in D, a
/// selector branch that applies may carry the condition on its own.
bool inner_edge_condition_for_set(const Graph& t, const Edge& e, VertexSet d);

/// Lowest-index leaf outside every γt-set. Throws NotATree, TooSmall.
std::optional<Vertex> leaf_condition(const Graph& t);

/// Evaluates the inner-edge condition over every γt-set; the failing set,
/// if any, is the lexicographically first violator. Throws NotInnerEdge.
EdgeConditionReport inner_edge_condition(const Graph& t, const Edge& e);

/// Leaf branch first, then inner edges in ascending order.
SdOneVerdict sd_one_verdict(const Graph& t);
/// True iff sd_one_verdict fires. Throws NotATree, TooSmall.
bool predicts_sd_one(const Graph& t);

/// Some end vertex lies in no γt-set, or some inner edge has both endpoints
/// in no γt-set. Works on any connected graph; throws Disconnected, TooSmall.
bool lemma2_sufficient(const Graph& g);

/// Every end vertex lies in some γt-set and every inner edge admits a γt-set
/// satisfying one of the clauses that keep γt unchanged after a single
/// subdivision. Throws NotATree, TooSmall.
bool lemma14_sufficient_sd_gt_one(const Graph& t);

/// Longest-path structure of trees with msd_γt = 3, checked from both ends of
/// every longest path: the two vertices after the end have degree 2 and the
/// third is not a support vertex. Requires diameter >= 5.
bool longest_path_structure_holds(const Graph& tree);

}  // namespace tdmsd
