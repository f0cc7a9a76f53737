#pragma once

#include <functional>
#include <vector>

#include "tdmsd/graph.hpp"

namespace tdmsd {

enum class DominationKind { Domination, TotalDomination };

struct DominationCertificate {
  int value = 0;
  VertexSet witness;
  DominationKind kind = DominationKind::TotalDomination;
};

struct MembershipFlags {
  bool in_some = false;
  bool in_all = false;
  bool in_none = true;
};

inline constexpr int kDefaultEnumerationCap = 20;

bool is_dominating(const Graph& g, VertexSet s);
/// Every vertex, members of s included, has a neighbour in s.
bool is_total_dominating(const Graph& g, VertexSet s);

/// Value-only solvers used in the inner loops of the subdivision searches.
int domination_number(const Graph& g);
/// Throws IsolatedVertex.
int total_domination_number(const Graph& g);

/// Constrained search: does a (total) dominating set S exist with
/// |S| <= budget, required ⊆ S and S ∩ forbidden = ∅?
bool dominating_set_exists(const Graph& g, DominationKind kind, int budget,
                           VertexSet required = {}, VertexSet forbidden = {});

/// Smallest (total) dominating set under the constraints; the witness is the
/// lexicographically smallest one of that size. Throws NotFound when no set
/// satisfies them.
DominationCertificate min_dominating_set(const Graph& g, DominationKind kind,
                                         VertexSet required = {}, VertexSet forbidden = {});

/// γ(G) with the lexicographically smallest witness.
DominationCertificate gamma(const Graph& g);
/// γt(G) with the lexicographically smallest witness. Throws IsolatedVertex.
DominationCertificate gamma_t(const Graph& g);

/// Every (total) dominating set of size exactly `size` that respects the
/// constraints, each reported once. The visitor returns false to stop early.
void for_each_dominating_set(const Graph& g, DominationKind kind, int size,
                             const std::function<bool(VertexSet)>& visit,
                             VertexSet required = {}, VertexSet forbidden = {});

/// All γt-sets, sorted lexicographically. Throws IsolatedVertex, and TooLarge
/// above `cap` vertices.
std::vector<VertexSet> all_min_total_dominating_sets(const Graph& g,
                                                     int cap = kDefaultEnumerationCap);

/// A γt-set avoiding every leaf (the lexicographically smallest such set).
/// Throws Disconnected, TooSmall, IsStar; NotFound signals a solver bug.
VertexSet gamma_t_set_avoiding_leaves(const Graph& g);

/// Per-vertex membership over all γt-sets.
std::vector<MembershipFlags> gamma_t_membership_profile(const Graph& g,
                                                        int cap = kDefaultEnumerationCap);
std::vector<MembershipFlags> membership_profile(const Graph& g, const std::vector<VertexSet>& sets);

}  // namespace tdmsd
