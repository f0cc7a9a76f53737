#include "tdmsd/domination.hpp"

#include <algorithm>
#include <string>

#include "tdmsd/error.hpp"

namespace tdmsd {

namespace {

// Branching search over "which vertex dominates the most constrained
// undominated vertex". Candidates tried earlier at a node are excluded from
// its later siblings, so every set is reached along exactly one branch.
class DominatorSearch {
public:
  DominatorSearch(const Graph& g, DominationKind kind) : g_(g), kind_(kind), all_(g.vertices()) {}

  // Neighbourhood a chosen vertex covers; symmetric, so it is also the set of
  // vertices that can cover v.
  VertexSet reach(Vertex v) const {
    return kind_ == DominationKind::TotalDomination ? g_.neighbors(v) : g_.closed_neighbors(v);
  }

  VertexSet reach(VertexSet s) const {
    VertexSet out;
    for (Vertex v : s) out |= reach(v);
    return out;
  }

  bool exists(int budget, VertexSet required, VertexSet forbidden) {
    found_ = false;
    mode_ = Mode::Exists;
    if (required.size() > budget) return false;
    descend(required, reach(required), all_ - forbidden - required, budget - required.size());
    return found_;
  }

  void enumerate(int size, VertexSet required, VertexSet forbidden,
                 const std::function<bool(VertexSet)>& visit) {
    mode_ = Mode::Enumerate;
    visit_ = &visit;
    stopped_ = false;
    if (required.size() > size) return;
    descend(required, reach(required), all_ - forbidden - required, size - required.size());
  }

private:
  enum class Mode { Exists, Enumerate };

  bool done() const { return mode_ == Mode::Exists ? found_ : stopped_; }

  void complete(VertexSet chosen, VertexSet avail, int budget) {
    if (mode_ == Mode::Exists) {
      found_ = true;
      return;
    }
    // Pad with every budget-sized subset of the still-available vertices.
    std::vector<Vertex> pool = avail.to_vector();
    pad(chosen, pool, 0, budget);
  }

  void pad(VertexSet chosen, const std::vector<Vertex>& pool, std::size_t from, int left) {
    if (stopped_) return;
    if (left == 0) {
      if (!(*visit_)(chosen)) stopped_ = true;
      return;
    }
    for (std::size_t i = from; i + left <= pool.size(); ++i) {
      VertexSet next = chosen;
      next.insert(pool[i]);
      pad(next, pool, i + 1, left - 1);
      if (stopped_) return;
    }
  }

  void descend(VertexSet chosen, VertexSet covered, VertexSet avail, int budget) {
    VertexSet open = all_ - covered;
    if (open.empty()) {
      complete(chosen, avail, budget);
      return;
    }
    if (budget == 0) return;

    int best_gain = 0;
    for (Vertex x : avail) best_gain = std::max(best_gain, (reach(x) & open).size());
    if (best_gain == 0 || (open.size() + best_gain - 1) / best_gain > budget) return;

    Vertex pivot = -1;
    int fewest = kMaxVertices + 1;
    for (Vertex v : open) {
      int options = (reach(v) & avail).size();
      if (options < fewest) {
        fewest = options;
        pivot = v;
        if (options <= 1) break;
      }
    }
    if (fewest == 0) return;

    VertexSet remaining = avail;
    for (Vertex c : reach(pivot) & avail) {
      remaining.erase(c);
      VertexSet next = chosen;
      next.insert(c);
      descend(next, covered | reach(c), remaining, budget - 1);
      if (done()) return;
    }
  }

  const Graph& g_;
  DominationKind kind_;
  VertexSet all_;
  Mode mode_ = Mode::Exists;
  bool found_ = false;
  bool stopped_ = false;
  const std::function<bool(VertexSet)>* visit_ = nullptr;
};

void require_no_isolated(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v) + " has no neighbour");
    }
  }
}

int minimum_size(const Graph& g, DominationKind kind, VertexSet required, VertexSet forbidden) {
  DominatorSearch search(g, kind);
  int max_reach = 1;
  for (Vertex v = 0; v < g.order(); ++v) max_reach = std::max(max_reach, search.reach(v).size());
  int k = std::max((g.order() + max_reach - 1) / max_reach, required.size());
  if (kind == DominationKind::TotalDomination) k = std::max(k, 2);
  int limit = (g.vertices() - forbidden).size();
  for (; k <= limit; ++k) {
    if (search.exists(k, required, forbidden)) return k;
  }
  return -1;
}

}  // namespace

bool is_dominating(const Graph& g, VertexSet s) {
  return g.closed_neighbors(s) == g.vertices();
}

bool is_total_dominating(const Graph& g, VertexSet s) { return g.neighbors(s) == g.vertices(); }

int domination_number(const Graph& g) {
  return minimum_size(g, DominationKind::Domination, {}, {});
}

int total_domination_number(const Graph& g) {
  require_no_isolated(g);
  return minimum_size(g, DominationKind::TotalDomination, {}, {});
}

bool dominating_set_exists(const Graph& g, DominationKind kind, int budget, VertexSet required,
                           VertexSet forbidden) {
  return DominatorSearch(g, kind).exists(budget, required, forbidden);
}

DominationCertificate min_dominating_set(const Graph& g, DominationKind kind, VertexSet required,
                                         VertexSet forbidden) {
  if (required.intersects(forbidden)) throw Error(ErrorCode::NotFound, "required and forbidden overlap");
  int k = minimum_size(g, kind, required, forbidden);
  if (k < 0) throw Error(ErrorCode::NotFound, "no dominating set satisfies the constraints");
  // Fix vertices in increasing index order, keeping each one whenever a
  // k-set containing the current choice still exists.
  DominatorSearch search(g, kind);
  VertexSet in = required;
  VertexSet out = forbidden;
  for (Vertex v = 0; v < g.order() && in.size() < k; ++v) {
    if (in.contains(v) || out.contains(v)) continue;
    VertexSet trial = in;
    trial.insert(v);
    if (search.exists(k, trial, out)) {
      in = trial;
    } else {
      out.insert(v);
    }
  }
  return {k, in, kind};
}

DominationCertificate gamma(const Graph& g) { return min_dominating_set(g, DominationKind::Domination); }

DominationCertificate gamma_t(const Graph& g) {
  require_no_isolated(g);
  return min_dominating_set(g, DominationKind::TotalDomination);
}

void for_each_dominating_set(const Graph& g, DominationKind kind, int size,
                             const std::function<bool(VertexSet)>& visit, VertexSet required,
                             VertexSet forbidden) {
  DominatorSearch(g, kind).enumerate(size, required, forbidden, visit);
}

std::vector<VertexSet> all_min_total_dominating_sets(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw Error(ErrorCode::TooLarge,
                "enumeration cap is " + std::to_string(cap) + ", graph has " + std::to_string(g.order()));
  }
  int k = total_domination_number(g);
  std::vector<VertexSet> out;
  for_each_dominating_set(g, DominationKind::TotalDomination, k, [&](VertexSet s) {
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

VertexSet gamma_t_set_avoiding_leaves(const Graph& g) {
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "needs at least 2 vertices");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
  if (is_star(g)) throw Error(ErrorCode::IsStar, "every total dominating set of a star meets a leaf");
  int k = total_domination_number(g);
  VertexSet forbidden = leaves(g);
  if (!dominating_set_exists(g, DominationKind::TotalDomination, k, {}, forbidden)) {
    throw Error(ErrorCode::NotFound, "no leaf-free minimum total dominating set");
  }
  auto cert = min_dominating_set(g, DominationKind::TotalDomination, {}, forbidden);
  if (cert.value != k) throw Error(ErrorCode::NotFound, "leaf-free search disagrees with γt");
  return cert.witness;
}

std::vector<MembershipFlags> membership_profile(const Graph& g, const std::vector<VertexSet>& sets) {
  VertexSet some;
  VertexSet every = g.vertices();
  for (VertexSet s : sets) {
    some |= s;
    every &= s;
  }
  if (sets.empty()) every = {};
  std::vector<MembershipFlags> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    out[v].in_some = some.contains(v);
    out[v].in_all = every.contains(v);
    out[v].in_none = !out[v].in_some;
  }
  return out;
}

std::vector<MembershipFlags> gamma_t_membership_profile(const Graph& g, int cap) {
  return membership_profile(g, all_min_total_dominating_sets(g, cap));
}

}  // namespace tdmsd
