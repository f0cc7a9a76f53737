#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tdmsd/domination.hpp"
#include "tdmsd/graph.hpp"

namespace tdmsd {

/// Outcome of a (multi)subdivision search.
struct SubdivisionResult {
  /// Empty when no increase was found within the cap.
  std::optional<int> value;
  std::vector<Edge> witness_edges;
  /// Subdivision count applied to each witness edge.
  std::vector<int> witness_t;
  int base_value = 0;
  std::optional<int> increased_value;

  bool exceeds_cap() const { return !value.has_value(); }
};

/// msd default: the bound msd_γt(G) <= 3 holds for every connected graph.
inline constexpr int kDefaultMsdCap = 3;

/// Memoizes γ / γt by canonical code. Trees are always memoized; other
/// graphs only up to the default canonical cap. Not thread-safe; give each
/// worker its own instance.
class InvariantCache {
public:
  explicit InvariantCache(DominationKind kind) : kind_(kind) {}

  int value(const Graph& g);

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  const std::unordered_map<std::string, int>& entries() const { return memo_; }
  void insert(const std::string& code, int value) { memo_.emplace(code, value); }

private:
  DominationKind kind_;
  std::unordered_map<std::string, int> memo_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

/// Smallest t <= cap such that subdividing e with t vertices raises γt.
/// Throws Disconnected, TooSmall (n < 2), EdgeNotPresent.
SubdivisionResult msd_gamma_t_edge(const Graph& g, const Edge& e, int cap = kDefaultMsdCap,
                                   InvariantCache* cache = nullptr);

/// min over edges of msd_gamma_t_edge; ties go to the lowest edge.
SubdivisionResult msd_gamma_t(const Graph& g, int cap = kDefaultMsdCap, InvariantCache* cache = nullptr);

/// Smallest k <= cap such that subdividing some k distinct edges once each
/// raises γt; subsets are tried in lexicographic order. cap < 0 means m.
/// Throws Disconnected, TooSmall (n < 3).
SubdivisionResult sd_gamma_t(const Graph& g, int cap = -1, InvariantCache* cache = nullptr);

/// The same two searches for the domination number.
SubdivisionResult msd_gamma_edge(const Graph& g, const Edge& e, int cap, InvariantCache* cache = nullptr);
SubdivisionResult msd_gamma(const Graph& g, int cap, InvariantCache* cache = nullptr);
SubdivisionResult sd_gamma(const Graph& g, int cap = -1, InvariantCache* cache = nullptr);

/// Rebuilds the witness graph of a finite result (each witness edge split
/// witness_t times).
Graph apply_witness(const Graph& g, const SubdivisionResult& r);

}  // namespace tdmsd
