#pragma once

#include <set>
#include <string>
#include <vector>

#include "tdmsd/graph.hpp"

namespace tdmsd {

enum class Status { A, B, C };

char to_char(Status s);

/// A tree of the family together with its vertex statuses.
struct LabeledTree {
  Graph tree;
  std::vector<Status> status;

  VertexSet with_status(Status s) const;
  /// "CBAABC" style rendering indexed by vertex.
  std::string status_string() const;
};

enum class FamilyOperation {
  /// At an A vertex y: attach path x, w, v via xy with statuses A, B, C.
  O1,
  /// At a B or C vertex y: attach path x, w, v, u via xy with statuses A, A, B, C.
  O2,
};

/// P6 on 0..5 with statuses C, B, A, A, B, C.
LabeledTree family_seed();

/// Throws WrongStatus when status(y) does not admit the operation and
/// IndexOutOfRange when y is not a vertex.
LabeledTree apply_operation(const LabeledTree& t, FamilyOperation kind, Vertex y);

/// Every leaf has status C, and B and C vertices pair up: each has exactly one
/// neighbour of the other status. (O2 anchored at a C makes that C inner.)
bool satisfies_label_law(const LabeledTree& t);

/// All members with at most n_max vertices, one per isomorphism class of the
/// underlying tree, ordered by (order, canonical code). Throws OutOfRange for
/// n_max < 6.
std::vector<LabeledTree> generate_family(int n_max);

/// Canonical codes of the members up to n_max; built once, then queried.
class FamilyIndex {
public:
  explicit FamilyIndex(int n_max);

  int n_max() const { return n_max_; }
  const std::vector<LabeledTree>& members() const { return members_; }
  /// Requires t.order() <= n_max.
  bool contains(const Graph& t) const;

private:
  int n_max_;
  std::vector<LabeledTree> members_;
  std::set<std::string> codes_;
};

/// Membership of the unlabeled tree. Throws NotATree; TooSmall for n < 3.
bool is_in_family(const Graph& t);

/// B ∪ C is a total dominating set of size γt(t.tree).
bool verify_bc_property(const LabeledTree& t);

}  // namespace tdmsd
