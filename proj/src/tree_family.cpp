#include "tdmsd/tree_family.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "tdmsd/canonical.hpp"
#include "tdmsd/domination.hpp"
#include "tdmsd/error.hpp"

namespace tdmsd {

char to_char(Status s) {
  switch (s) {
    case Status::A: return 'A';
    case Status::B: return 'B';
    case Status::C: return 'C';
  }
  return '?';
}

VertexSet LabeledTree::with_status(Status s) const {
  VertexSet out;
  for (Vertex v = 0; v < static_cast<Vertex>(status.size()); ++v) {
    if (status[v] == s) out.insert(v);
  }
  return out;
}

std::string LabeledTree::status_string() const {
  std::string out;
  for (Status s : status) out += to_char(s);
  return out;
}

LabeledTree family_seed() {
  using enum Status;
  return {path_graph(6), {C, B, A, A, B, C}};
}

bool satisfies_label_law(const LabeledTree& t) {
  VertexSet bs = t.with_status(Status::B);
  VertexSet cs = t.with_status(Status::C);
  if (!leaves(t.tree).is_subset_of(cs)) return false;
  for (Vertex v : cs) {
    if ((t.tree.neighbors(v) & bs).size() != 1) return false;
  }
  for (Vertex v : bs) {
    if ((t.tree.neighbors(v) & cs).size() != 1) return false;
  }
  return true;
}

LabeledTree apply_operation(const LabeledTree& t, FamilyOperation kind, Vertex y) {
  int n = t.tree.order();
  if (y < 0 || y >= n) throw Error(ErrorCode::IndexOutOfRange, "anchor " + std::to_string(y));
  Status sy = t.status[y];
  using enum Status;
  std::vector<Status> added;
  if (kind == FamilyOperation::O1) {
    if (sy != A) throw Error(ErrorCode::WrongStatus, "O1 needs an A anchor");
    added = {A, B, C};
  } else {
    if (sy != B && sy != C) throw Error(ErrorCode::WrongStatus, "O2 needs a B or C anchor");
    added = {A, A, B, C};
  }
  auto edges = t.tree.edges();
  edges.emplace_back(y, n);
  for (int i = 1; i < static_cast<int>(added.size()); ++i) edges.emplace_back(n + i - 1, n + i);
  LabeledTree out{Graph::from_edges(n + static_cast<int>(added.size()), edges), t.status};
  out.status.insert(out.status.end(), added.begin(), added.end());
  if (!satisfies_label_law(out)) throw std::logic_error("family operation broke the label law");
  return out;
}

namespace {

std::string labeled_code(const LabeledTree& t) {
  std::vector<int> colors(t.status.size());
  for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<int>(t.status[i]);
  return colored_tree_code(t.tree, colors);
}

}  // namespace

std::vector<LabeledTree> generate_family(int n_max) {
  if (n_max < 6) throw Error(ErrorCode::OutOfRange, "family members have at least 6 vertices");
  // The closure runs over labeled trees: one unlabeled tree can carry several
  // labelings, and the operations available depend on the labels.
  std::set<std::string> seen_labeled;
  std::map<std::pair<int, std::string>, LabeledTree> by_shape;
  std::deque<LabeledTree> queue;

  auto admit = [&](LabeledTree t) {
    if (!seen_labeled.insert(labeled_code(t)).second) return;
    by_shape.try_emplace({t.tree.order(), canonical_code(t.tree, kMaxVertices)}, t);
    queue.push_back(std::move(t));
  };

  admit(family_seed());
  while (!queue.empty()) {
    LabeledTree t = std::move(queue.front());
    queue.pop_front();
    for (Vertex y = 0; y < t.tree.order(); ++y) {
      auto kind = t.status[y] == Status::A ? FamilyOperation::O1 : FamilyOperation::O2;
      int grows = kind == FamilyOperation::O1 ? 3 : 4;
      if (t.tree.order() + grows > n_max) continue;
      admit(apply_operation(t, kind, y));
    }
  }
  std::vector<LabeledTree> out;
  out.reserve(by_shape.size());
  for (auto& [key, t] : by_shape) out.push_back(std::move(t));
  return out;
}

FamilyIndex::FamilyIndex(int n_max) : n_max_(n_max), members_(generate_family(n_max)) {
  for (const auto& m : members_) codes_.insert(canonical_code(m.tree, kMaxVertices));
}

bool FamilyIndex::contains(const Graph& t) const {
  if (t.order() > n_max_) throw Error(ErrorCode::OutOfRange, "tree larger than the index bound");
  if (!is_tree(t)) return false;
  return codes_.contains(canonical_code(t, kMaxVertices));
}

bool is_in_family(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorCode::NotATree, "family membership is defined for trees");
  if (t.order() < 3) throw Error(ErrorCode::TooSmall, "needs at least 3 vertices");
  if (t.order() < 6) return false;
  return FamilyIndex(t.order()).contains(t);
}

bool verify_bc_property(const LabeledTree& t) {
  VertexSet bc = t.with_status(Status::B) | t.with_status(Status::C);
  return is_total_dominating(t.tree, bc) && bc.size() == total_domination_number(t.tree);
}

}  // namespace tdmsd
