#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tdmsd/canonical.hpp"
#include "tdmsd/enumeration.hpp"
#include "tdmsd/error.hpp"
#include "tdmsd/io.hpp"

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

// Number of unlabeled free trees on n vertices from Otter's formula, with the
// rooted counts taken from the Euler-transform recurrence.
long long otter_free_trees(int n) {
  std::vector<long long> r(n + 1, 0);
  r[1] = 1;
  for (int m = 1; m < n; ++m) {
    long long sum = 0;
    for (int k = 1; k <= m; ++k) {
      long long s = 0;
      for (int d = 1; d <= k; ++d) {
        if (k % d == 0) s += d * r[d];
      }
      sum += s * r[m - k + 1];
    }
    r[m + 1] = sum / m;
  }
  long long pairs = 0;
  for (int i = 1; i < n; ++i) pairs += r[i] * r[n - i];
  if (n % 2 == 0) pairs -= r[n / 2];
  return r[n] - pairs / 2;
}

std::set<std::string> codes_of(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const Graph& g : gs) out.insert(canonical_code(g));
  return out;
}

}  // namespace

TEST_CASE("tree census") {
  CHECK(enumerate_trees(1).size() == 1);
  CHECK(enumerate_trees(4).size() == 2);
  CHECK(enumerate_trees(7).size() == 11);
  for (int n = 1; n <= 16; ++n) {
    auto stream = enumerate_trees(n);
    CHECK(static_cast<long long>(stream.size()) == otter_free_trees(n));
    CHECK(stream.order == n);
    if (n <= 13) {
      std::set<std::string> codes;
      for (const Graph& t : stream) {
        CHECK(is_tree(t));
        CHECK(t.order() == n);
        codes.insert(canonical_code(t, kMaxVertices));
      }
      CHECK(codes.size() == stream.size());
    }
  }
  CHECK(code_of([] { enumerate_trees(0); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { enumerate_trees(17); }) == ErrorCode::OutOfRange);
}

TEST_CASE("Prüfer decoding and leaf extension agree") {
  for (int n = 1; n <= 9; ++n) {
    CHECK(codes_of(trees_by_prufer(n)) == codes_of(trees_by_leaf_extension(n)));
  }
}

TEST_CASE("tree_from_prufer") {
  Graph t = tree_from_prufer({3, 3, 3});
  CHECK(canonical_code(t) == canonical_code(star_graph(5)));
  CHECK(t.degree(3) == 4);
  Graph p = tree_from_prufer({1, 2, 3});
  CHECK(canonical_code(p) == canonical_code(path_graph(5)));
}

TEST_CASE("connected graph census") {
  CHECK(enumerate_connected_graphs(2).size() == 1);
  CHECK(enumerate_connected_graphs(3).size() == 2);
  CHECK(enumerate_connected_graphs(5).size() == 21);
  CHECK(enumerate_connected_graphs(6).size() == 112);
  auto seven = enumerate_connected_graphs(7);
  CHECK(seven.size() == 853);
  for (const Graph& g : seven) CHECK(is_connected(g));
  CHECK(codes_of(seven.graphs).size() == 853);
  CHECK(code_of([] { enumerate_connected_graphs(8); }) == ErrorCode::OutOfRange);
}

TEST_CASE("connected graph counts match a brute-force dedupe for n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    std::set<std::string> all_classes;
    std::set<std::string> connected;
    std::map<std::string, std::string> complement_of;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      std::vector<std::pair<int, int>> edges;
      std::vector<std::pair<int, int>> co;
      int bit = 0;
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) ((mask >> bit) & 1U ? edges : co).emplace_back(i, j);
      }
      Graph g = Graph::from_edge_list(n, edges);
      std::string code = oracle::permutation_code(g);
      all_classes.insert(code);
      if (is_connected(g)) connected.insert(code);
      complement_of[code] = oracle::permutation_code(Graph::from_edge_list(n, co));
    }
    // complementation is an involution on the classes
    for (auto& [code, comp] : complement_of) CHECK(complement_of.at(comp) == code);
    std::set<std::string> ours;
    for (const Graph& g : enumerate_connected_graphs(n)) ours.insert(oracle::permutation_code(g));
    CHECK(ours == connected);
  }
}

TEST_CASE("stream order is ascending canonical code") {
  for (int n : {5, 9}) {
    auto stream = enumerate_trees(n);
    for (std::size_t i = 1; i < stream.size(); ++i) {
      CHECK(canonical_code(stream.graphs[i - 1]) < canonical_code(stream.graphs[i]));
    }
  }
  auto six = enumerate_connected_graphs(6);
  for (std::size_t i = 1; i < six.size(); ++i) {
    CHECK(canonical_code(six.graphs[i - 1]) < canonical_code(six.graphs[i]));
  }
}

TEST_CASE("graph6") {
  CHECK(to_graph6(complete_graph(2)) == "A_");
  CHECK(from_graph6("A_") == complete_graph(2));
  CHECK(from_graph6(">>graph6<<A_") == complete_graph(2));
  CHECK(from_graph6(to_graph6(path_graph(6))) == path_graph(6));
  CHECK(code_of([] { from_graph6("A "); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { from_graph6(""); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { from_graph6("C"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { to_graph6(path_graph(63)); }) == ErrorCode::TooLarge);

  std::mt19937 rng(53);
  for (int n = 1; n <= 20; ++n) {
    for (int k = 0; k < 1000; ++k) {
      Graph g = oracle::random_graph(rng, n, 0.5);
      std::string line = to_graph6(g);
      CHECK(line.size() == 1 + (n * (n - 1) / 2 + 5) / 6);
      for (char c : line) CHECK((c >= 63 && c <= 126));
      CHECK(from_graph6(line) == g);
    }
  }
}

TEST_CASE("edge lists and format sniffing") {
  Graph g = gstar_graph();
  std::string text = to_edge_list(g);
  CHECK(text.rfind("12 15\n", 0) == 0);
  CHECK(sniff_format(text) == GraphFormat::EdgeList);
  CHECK(sniff_format("A_\n") == GraphFormat::Graph6);
  auto parsed = parse_graphs(text);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0] == g);

  std::string two = "# comment\n" + to_edge_list(path_graph(3)) + "status: CBA\n" + to_edge_list(cycle_graph(4));
  auto both = parse_graphs(two);
  REQUIRE(both.size() == 2);
  CHECK(both[0] == path_graph(3));
  CHECK(both[1] == cycle_graph(4));

  auto lines = parse_graphs("A_\nBw\n");
  REQUIRE(lines.size() == 2);
  CHECK(lines[1] == complete_graph(3));

  CHECK(code_of([] { parse_graphs("3 2\n0 1\n"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_graphs("3 1\n0 7\n"); }) == ErrorCode::MalformedInput);
}
