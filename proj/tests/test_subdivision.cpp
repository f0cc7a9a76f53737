#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tdmsd/canonical.hpp"
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

TEST_CASE("msd_gamma_t_edge") {
  auto c6 = msd_gamma_t_edge(cycle_graph(6), Edge(0, 1), 3);
  CHECK(c6.value == 3);
  CHECK(c6.base_value == 4);
  CHECK(c6.increased_value == 5);
  CHECK(msd_gamma_t_edge(star_graph(4), Edge(0, 1), 3).value == 2);
  CHECK(msd_gamma_t_edge(path_graph(4), Edge(1, 2), 3).value == 1);
  CHECK(code_of([] { msd_gamma_t_edge(path_graph(4), Edge(0, 2), 3); }) == ErrorCode::EdgeNotPresent);
  CHECK(code_of([] { msd_gamma_t(Graph::from_edge_list(4, {{0, 1}, {2, 3}})); }) == ErrorCode::Disconnected);
  CHECK(code_of([] { msd_gamma_t(Graph::from_edge_list(1, {})); }) == ErrorCode::TooSmall);
  CHECK(code_of([] { sd_gamma_t(complete_graph(2)); }) == ErrorCode::TooSmall);
}

TEST_CASE("msd and sd on the separating examples") {
  CHECK(msd_gamma_t(complete_graph(4)).value == 2);
  CHECK(sd_gamma_t(complete_graph(4)).value == 3);
  CHECK(msd_gamma_t(gstar_graph()).value == 3);
  CHECK(sd_gamma_t(gstar_graph()).value == 2);
  // hub plus C5 and hub plus C4
  CHECK(msd_gamma_t(wheel_graph(6)).value == 2);
  CHECK(msd_gamma_t(wheel_graph(5)).value == 2);
  CHECK(sd_gamma_t(path_graph(7)).value == 2);
}

TEST_CASE("cap handling") {
  auto r = msd_gamma_t(cycle_graph(6), 2);
  CHECK(r.exceeds_cap());
  CHECK(r.base_value == 4);
  auto s = sd_gamma_t(complete_graph(4), 2);
  CHECK(s.exceeds_cap());
  CHECK(sd_gamma_t(complete_graph(4), 3).value == 3);
}

TEST_CASE("domination subdivision numbers") {
  CHECK(msd_gamma(path_graph(3), 3).value == 1);
  CHECK(msd_gamma(path_graph(4), 3).value == 3);
  CHECK(msd_gamma(cycle_graph(4), 3).value == 3);
  CHECK(sd_gamma(path_graph(4)).value == 3);
  // one subdivision turns K3 into C4, whose domination number is 2
  CHECK(sd_gamma(complete_graph(3)).value == 1);
  CHECK(oracle::sd(complete_graph(3), false) == 1);
  CHECK(sd_gamma(path_graph(6)).value == 1);
}

TEST_CASE("witness graphs reproduce the reported increase") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = oracle::random_connected_graph(rng, 3 + trial % 6, 0.4);
    for (auto r : {msd_gamma_t(g), sd_gamma_t(g)}) {
      REQUIRE(r.value.has_value());
      Graph h = apply_witness(g, r);
      CHECK(oracle::gamma_t(h) == *r.increased_value);
      CHECK(*r.increased_value > r.base_value);
      CHECK(r.base_value == oracle::gamma_t(g));
    }
  }
}

TEST_CASE("msd and sd agree with brute force on random connected graphs") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = oracle::random_connected_graph(rng, 3 + trial % 5, 0.45);
    CHECK(msd_gamma_t(g).value == oracle::msd(g, 3, true));
    CHECK(sd_gamma_t(g).value == oracle::sd(g, true));
    CHECK(msd_gamma(g, 3).value == oracle::msd(g, 3, false));
    CHECK(sd_gamma(g).value == oracle::sd(g, false));
  }
}

TEST_CASE("identities over all small connected graphs") {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : connected_graphs_cached(n)) {
      auto msd = msd_gamma_t(g);
      auto sd = sd_gamma_t(g);
      REQUIRE(msd.value.has_value());
      CHECK(*msd.value <= 3);
      // one subdivision of one edge is the same operation in both
      CHECK((sd.value == 1) == (msd.value == 1));
      if (!universal_vertices(g).empty()) CHECK(msd.value == 2);
    }
  }
}

TEST_CASE("adjacent support vertices in a tree force sd = 1") {
  for (int n = 4; n <= 11; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      VertexSet sup = support_vertices(t);
      bool adjacent = false;
      for (const Edge& e : t.edges()) adjacent |= sup.contains(e.u) && sup.contains(e.v);
      if (adjacent) CHECK(sd_gamma_t(t).value == 1);
    }
  }
}

TEST_CASE("path and cycle closed forms") {
  for (int n = 3; n <= 12; ++n) {
    int want = path_cycle_sd_closed_form(n);
    for (const Graph& g : {path_graph(n), cycle_graph(n)}) {
      CHECK(msd_gamma_t(g).value == want);
      CHECK(sd_gamma_t(g).value == want);
      CHECK(gamma_t_closed_form(n) == oracle::gamma_t(g));
    }
    CHECK(path_gamma_closed_form(n) == oracle::gamma(path_graph(n)));
  }
}

TEST_CASE("InvariantCache") {
  InvariantCache cache(DominationKind::TotalDomination);
  Graph p6 = path_graph(6);
  std::vector<Vertex> perm{5, 4, 3, 2, 1, 0};
  CHECK(cache.value(p6) == 4);
  CHECK(cache.value(p6.relabeled(perm)) == 4);
  CHECK(cache.hits() == 1);
  CHECK(cache.misses() == 1);
  auto plain = msd_gamma_t(gstar_graph());
  auto cached = msd_gamma_t(gstar_graph(), 3, &cache);
  CHECK(plain.value == cached.value);
  CHECK(plain.witness_edges == cached.witness_edges);

  InvariantCache dom(DominationKind::Domination);
  CHECK(dom.value(p6) == 2);
}
