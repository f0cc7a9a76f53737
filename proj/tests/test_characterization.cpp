#include <doctest.h>

#include "oracles.hpp"
#include "tdmsd/characterization.hpp"
#include "tdmsd/domination.hpp"
#include "tdmsd/enumeration.hpp"
#include "tdmsd/error.hpp"
#include "tdmsd/subdivision.hpp"
#include "tdmsd/verify.hpp"

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

}  // namespace

TEST_CASE("leaf_condition") {
  CHECK(leaf_condition(path_graph(4)) == 0);
  CHECK_FALSE(leaf_condition(path_graph(7)).has_value());
  // {1,2,3} is the only γt-set of P5
  CHECK(oracle::all_minimum(path_graph(5), true) == std::vector<VertexSet>{{1, 2, 3}});
  CHECK(leaf_condition(path_graph(5)) == 0);
  CHECK(code_of([] { leaf_condition(cycle_graph(4)); }) == ErrorCode::NotATree);
  CHECK(code_of([] { leaf_condition(path_graph(2)); }) == ErrorCode::TooSmall);
}

TEST_CASE("inner_edge_condition") {
  CHECK(inner_edge_condition(path_graph(5), Edge(1, 2)).holds);
  for (int n : {6, 7}) {
    Graph p = path_graph(n);
    for (const Edge& e : structure_profile(p).inner_edges) {
      auto report = inner_edge_condition(p, e);
      CHECK_FALSE(report.holds);
      REQUIRE(report.failing_set.has_value());
      CHECK(is_total_dominating(p, *report.failing_set));
      CHECK(report.failing_set->size() == oracle::gamma_t(p));
      CHECK_FALSE(inner_edge_condition_for_set(p, e, *report.failing_set));
    }
  }
  CHECK(code_of([] { inner_edge_condition(path_graph(5), Edge(0, 1)); }) == ErrorCode::NotInnerEdge);
}

TEST_CASE("predicts_sd_one") {
  CHECK(predicts_sd_one(path_graph(4)));
  CHECK(sd_one_verdict(path_graph(4)).leaf == 0);
  CHECK(predicts_sd_one(path_graph(5)));
  CHECK(sd_one_verdict(path_graph(5)).leaf == 0);
  CHECK_FALSE(predicts_sd_one(path_graph(6)));
  CHECK_FALSE(predicts_sd_one(path_graph(7)));
}

TEST_CASE("predicts_sd_one matches brute force on all trees up to 10") {
  for (int n = 3; n <= 10; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      bool one = sd_gamma_t(t, 1).value == 1;
      CHECK(predicts_sd_one(t) == one);
      if (n <= 8) CHECK(one == (oracle::sd(t, true) == 1));
    }
  }
}

TEST_CASE("lemma2_sufficient") {
  CHECK(lemma2_sufficient(path_graph(4)));
  CHECK_FALSE(lemma2_sufficient(cycle_graph(4)));
  CHECK(code_of([] { lemma2_sufficient(Graph::from_edge_list(4, {{0, 1}, {2, 3}})); }) ==
        ErrorCode::Disconnected);
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : connected_graphs_cached(n)) {
      if (lemma2_sufficient(g)) CHECK(sd_gamma_t(g, 1).value == 1);
    }
  }
}

TEST_CASE("lemma14_sufficient_sd_gt_one") {
  CHECK(lemma14_sufficient_sd_gt_one(path_graph(6)));
  CHECK_FALSE(lemma14_sufficient_sd_gt_one(path_graph(4)));
  CHECK(lemma14_sufficient_sd_gt_one(path_graph(7)));
  for (int n = 3; n <= 10; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      if (lemma14_sufficient_sd_gt_one(t)) CHECK(sd_gamma_t(t, 1).exceeds_cap());
    }
  }
}

TEST_CASE("longest path structure") {
  CHECK(longest_path_structure_holds(path_graph(6)));
  CHECK(longest_path_structure_holds(path_graph(7)));
  // P6 with an extra leaf on vertex 1: the vertex after the end has degree 3
  CHECK_FALSE(longest_path_structure_holds(
      Graph::from_edge_list(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}})));
  for (int n = 6; n <= 11; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      if (msd_gamma_t(t).value == 3) CHECK(longest_path_structure_holds(t));
    }
  }
}
