#include "tdmsd/subdivision.hpp"

#include <string>

#include "tdmsd/canonical.hpp"
#include "tdmsd/error.hpp"

namespace tdmsd {

int InvariantCache::value(const Graph& g) {
  auto compute = [&] {
    return kind_ == DominationKind::TotalDomination ? total_domination_number(g) : domination_number(g);
  };
  bool tree = is_tree(g);
  if (!tree && g.order() > kDefaultCanonicalCap) return compute();
  std::string code = canonical_code(g, tree ? kMaxVertices : kDefaultCanonicalCap);
  if (auto it = memo_.find(code); it != memo_.end()) {
    ++hits_;
    return it->second;
  }
  ++misses_;
  int v = compute();
  memo_.emplace(std::move(code), v);
  return v;
}

namespace {

void require_connected(const Graph& g, int min_order) {
  if (g.order() < min_order) {
    throw Error(ErrorCode::TooSmall, "needs at least " + std::to_string(min_order) + " vertices");
  }
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
}

class Evaluator {
public:
  Evaluator(DominationKind kind, InvariantCache* shared) : shared_(shared), own_(kind) {}

  int operator()(const Graph& g) { return (shared_ != nullptr ? *shared_ : own_).value(g); }

private:
  InvariantCache* shared_;
  InvariantCache own_;
};

SubdivisionResult msd_edge_impl(DominationKind kind, const Graph& g, const Edge& e, int cap,
                                InvariantCache* cache) {
  require_connected(g, 2);
  if (!g.has_edge(e)) {
    throw Error(ErrorCode::EdgeNotPresent, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  Evaluator eval(kind, cache);
  SubdivisionResult r;
  r.base_value = eval(g);
  for (int t = 1; t <= cap; ++t) {
    int after = eval(subdivide(g, e, t));
    if (after > r.base_value) {
      r.value = t;
      r.witness_edges = {e};
      r.witness_t = {t};
      r.increased_value = after;
      return r;
    }
  }
  return r;
}

SubdivisionResult msd_impl(DominationKind kind, const Graph& g, int cap, InvariantCache* cache) {
  require_connected(g, 2);
  Evaluator eval(kind, cache);
  SubdivisionResult r;
  r.base_value = eval(g);
  auto edges = g.edges();
  // The first t at which any edge increases is the minimum over edges, and the
  // first such edge in ascending order is the lowest argmin.
  for (int t = 1; t <= cap; ++t) {
    for (const Edge& e : edges) {
      int after = eval(subdivide(g, e, t));
      if (after > r.base_value) {
        r.value = t;
        r.witness_edges = {e};
        r.witness_t = {t};
        r.increased_value = after;
        return r;
      }
    }
  }
  return r;
}

// Calls visit on every k-subset of edges in lexicographic index order until
// it returns true.
template <typename Visit>
bool for_each_edge_subset(const std::vector<Edge>& edges, int k, Visit&& visit) {
  int m = static_cast<int>(edges.size());
  if (k > m) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<Edge> chosen(k);
  while (true) {
    for (int i = 0; i < k; ++i) chosen[i] = edges[idx[i]];
    if (visit(chosen)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

SubdivisionResult sd_impl(DominationKind kind, const Graph& g, int cap, InvariantCache* cache) {
  require_connected(g, 3);
  Evaluator eval(kind, cache);
  SubdivisionResult r;
  r.base_value = eval(g);
  auto edges = g.edges();
  int limit = cap < 0 ? g.size() : std::min(cap, g.size());
  for (int k = 1; k <= limit; ++k) {
    bool hit = for_each_edge_subset(edges, k, [&](const std::vector<Edge>& chosen) {
      int after = eval(subdivide_each_once(g, chosen));
      if (after <= r.base_value) return false;
      r.value = k;
      r.witness_edges = chosen;
      r.witness_t.assign(k, 1);
      r.increased_value = after;
      return true;
    });
    if (hit) return r;
  }
  return r;
}

}  // namespace

SubdivisionResult msd_gamma_t_edge(const Graph& g, const Edge& e, int cap, InvariantCache* cache) {
  return msd_edge_impl(DominationKind::TotalDomination, g, e, cap, cache);
}

SubdivisionResult msd_gamma_t(const Graph& g, int cap, InvariantCache* cache) {
  return msd_impl(DominationKind::TotalDomination, g, cap, cache);
}

SubdivisionResult sd_gamma_t(const Graph& g, int cap, InvariantCache* cache) {
  return sd_impl(DominationKind::TotalDomination, g, cap, cache);
}

SubdivisionResult msd_gamma_edge(const Graph& g, const Edge& e, int cap, InvariantCache* cache) {
  return msd_edge_impl(DominationKind::Domination, g, e, cap, cache);
}

SubdivisionResult msd_gamma(const Graph& g, int cap, InvariantCache* cache) {
  return msd_impl(DominationKind::Domination, g, cap, cache);
}

SubdivisionResult sd_gamma(const Graph& g, int cap, InvariantCache* cache) {
  return sd_impl(DominationKind::Domination, g, cap, cache);
}

Graph apply_witness(const Graph& g, const SubdivisionResult& r) {
  if (r.exceeds_cap()) throw Error(ErrorCode::NotFound, "result has no witness");
  if (r.witness_edges.size() == 1) return subdivide(g, r.witness_edges[0], r.witness_t[0]);
  return subdivide_each_once(g, r.witness_edges);
}

}  // namespace tdmsd
