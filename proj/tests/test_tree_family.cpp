#include <doctest.h>

#include <deque>
#include <set>

#include "oracles.hpp"
#include "tdmsd/canonical.hpp"
#include "tdmsd/domination.hpp"
#include "tdmsd/enumeration.hpp"
#include "tdmsd/error.hpp"
#include "tdmsd/subdivision.hpp"
#include "tdmsd/tree_family.hpp"

using namespace tdmsd;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::NotFound;
}

std::string labeled_code(const LabeledTree& t) {
  std::vector<int> colors;
  for (Status s : t.status) colors.push_back(static_cast<int>(s));
  return colored_tree_code(t.tree, colors);
}

struct Built {
  LabeledTree tree;
  int o1 = 0;
  int o2 = 0;
};

// Closure that remembers how many operations of each kind built each member.
std::vector<Built> closure_with_counts(int n_max) {
  std::vector<Built> out;
  std::set<std::string> seen;
  std::deque<Built> queue{{family_seed(), 0, 0}};
  seen.insert(labeled_code(family_seed()));
  while (!queue.empty()) {
    Built b = queue.front();
    queue.pop_front();
    out.push_back(b);
    for (Vertex y = 0; y < b.tree.tree.order(); ++y) {
      bool is_a = b.tree.status[y] == Status::A;
      if (b.tree.tree.order() + (is_a ? 3 : 4) > n_max) continue;
      Built next{apply_operation(b.tree, is_a ? FamilyOperation::O1 : FamilyOperation::O2, y), b.o1 + is_a,
                 b.o2 + !is_a};
      if (seen.insert(labeled_code(next.tree)).second) queue.push_back(next);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("seed") {
  LabeledTree seed = family_seed();
  CHECK(seed.tree == path_graph(6));
  CHECK(seed.status_string() == "CBAABC");
  CHECK(gamma_t(seed.tree).value == 4);
  VertexSet bc = seed.with_status(Status::B) | seed.with_status(Status::C);
  CHECK(is_total_dominating(seed.tree, bc));
  CHECK(verify_bc_property(seed));
  CHECK(satisfies_label_law(seed));
}

TEST_CASE("operations") {
  LabeledTree seed = family_seed();
  LabeledTree spider = apply_operation(seed, FamilyOperation::O1, 2);
  CHECK(spider.tree.order() == 9);
  CHECK(spider.tree.degree(2) == 3);
  CHECK(canonical_code(spider.tree) == canonical_code(apply_operation(seed, FamilyOperation::O1, 3).tree));

  LabeledTree p10 = apply_operation(seed, FamilyOperation::O2, 0);
  CHECK(canonical_code(p10.tree) == canonical_code(path_graph(10)));
  LabeledTree at_b = apply_operation(seed, FamilyOperation::O2, 1);
  CHECK(at_b.tree.order() == 10);
  CHECK(canonical_code(at_b.tree) != canonical_code(path_graph(10)));

  CHECK(code_of([&] { apply_operation(seed, FamilyOperation::O1, 1); }) == ErrorCode::WrongStatus);
  CHECK(code_of([&] { apply_operation(seed, FamilyOperation::O2, 2); }) == ErrorCode::WrongStatus);
  CHECK(code_of([&] { apply_operation(seed, FamilyOperation::O1, 6); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("generate_family sizes") {
  CHECK(generate_family(6).size() == 1);
  CHECK(generate_family(8).size() == 1);
  CHECK(code_of([] { generate_family(5); }) == ErrorCode::OutOfRange);

  std::set<std::string> members;
  for (const auto& m : generate_family(10)) members.insert(canonical_code(m.tree));
  std::set<std::string> sd3;
  for (int n = 3; n <= 10; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      if (sd_gamma_t(t).value == 3) sd3.insert(canonical_code(t));
    }
  }
  CHECK(members == sd3);
}

TEST_CASE("generated members are unique trees in (order, code) order") {
  auto members = generate_family(14);
  std::set<std::string> codes;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    CHECK(is_tree(m.tree));
    CHECK(satisfies_label_law(m));
    CHECK(codes.insert(canonical_code(m.tree, kMaxVertices)).second);
    if (i > 0) {
      const auto& prev = members[i - 1];
      bool ordered = prev.tree.order() < m.tree.order() ||
                     (prev.tree.order() == m.tree.order() &&
                      canonical_code(prev.tree, kMaxVertices) < canonical_code(m.tree, kMaxVertices));
      CHECK(ordered);
    }
  }
}

TEST_CASE("member arithmetic and invariants") {
  for (const Built& b : closure_with_counts(14)) {
    const Graph& t = b.tree.tree;
    CHECK(t.order() == 6 + 3 * b.o1 + 4 * b.o2);
    int gt = t.order() <= 13 ? oracle::gamma_t(t) : total_domination_number(t);
    CHECK(gt == 4 + 2 * (b.o1 + b.o2));
    CHECK(verify_bc_property(b.tree));
    CHECK(structure_profile(t).strong_supports.empty());
    if (t.order() <= 12) {
      CHECK(sd_gamma_t(t).value == 3);
      CHECK(msd_gamma_t(t).value == 3);
    }
  }
}

TEST_CASE("members of order 9 have a six-vertex B and C set") {
  for (const auto& m : generate_family(9)) {
    if (m.tree.order() != 9) continue;
    CHECK(verify_bc_property(m));
    CHECK((m.with_status(Status::B) | m.with_status(Status::C)).size() == 6);
  }
}

TEST_CASE("operations at distinct anchors commute") {
  LabeledTree seed = family_seed();
  for (Vertex y1 = 0; y1 < 6; ++y1) {
    for (Vertex y2 = 0; y2 < 6; ++y2) {
      auto k1 = seed.status[y1] == Status::A ? FamilyOperation::O1 : FamilyOperation::O2;
      auto k2 = seed.status[y2] == Status::A ? FamilyOperation::O1 : FamilyOperation::O2;
      auto a = apply_operation(apply_operation(seed, k1, y1), k2, y2);
      auto b = apply_operation(apply_operation(seed, k2, y2), k1, y1);
      CHECK(labeled_code(a) == labeled_code(b));
    }
  }
}

TEST_CASE("is_in_family") {
  CHECK(is_in_family(path_graph(6)));
  CHECK_FALSE(is_in_family(path_graph(7)));
  CHECK(is_in_family(path_graph(10)));
  CHECK_FALSE(is_in_family(path_graph(4)));
  CHECK(code_of([] { is_in_family(cycle_graph(6)); }) == ErrorCode::NotATree);
  CHECK(code_of([] { is_in_family(path_graph(2)); }) == ErrorCode::TooSmall);

  FamilyIndex index(12);
  CHECK(index.contains(path_graph(10)));
  CHECK_FALSE(index.contains(cycle_graph(6)));
  CHECK(code_of([&] { index.contains(path_graph(13)); }) == ErrorCode::OutOfRange);
}
