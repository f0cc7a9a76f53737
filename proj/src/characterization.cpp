#include "tdmsd/characterization.hpp"

#include "tdmsd/domination.hpp"
#include "tdmsd/error.hpp"

namespace tdmsd {

namespace {

void require_tree(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorCode::NotATree, "predicate is defined for trees");
  if (t.order() < 3) throw Error(ErrorCode::TooSmall, "needs at least 3 vertices");
}

bool only(VertexSet s, Vertex v) { return s == VertexSet::singleton(v); }

// Both endpoints in D and N(u) ∩ D = {v}: u's private neighbourhood is
// non-empty, and v has a private neighbour or a D-neighbour x ≠ u whose only
// D-neighbour is v.
bool selector_branch(const Graph& t, Vertex u, Vertex v, VertexSet d) {
  if (!only(t.neighbors(u) & d, v)) return false;
  if (private_neighborhood(t, u, d).empty()) return false;
  if (!private_neighborhood(t, v, d).empty()) return true;
  VertexSet others = t.neighbors(v) & d;
  others.erase(u);
  for (Vertex x : others) {
    if (only(t.neighbors(x) & d, v)) return true;
  }
  return false;
}

// Clause b2 of the sd > 1 test, anchored at u.
bool keeps_gamma_b2(const Graph& t, Vertex u, Vertex v, VertexSet d) {
  if (!only(t.neighbors(u) & d, v)) return false;
  if (private_neighborhood(t, u, d).empty()) return true;
  if (!private_neighborhood(t, v, d).empty()) return false;
  VertexSet others = t.neighbors(v) & d;
  others.erase(u);
  for (Vertex x : others) {
    if ((t.neighbors(x) & d).size() < 2) return false;
  }
  return true;
}

bool keeps_gamma_for_set(const Graph& t, const Edge& e, VertexSet d) {
  bool in_u = d.contains(e.u);
  bool in_v = d.contains(e.v);
  if (in_u != in_v) {
    Vertex a = in_u ? e.u : e.v;
    Vertex b = in_u ? e.v : e.u;
    return !private_neighborhood(t, a, d).contains(b);
  }
  if (!in_u) return false;
  bool b1 = (t.neighbors(e.u) & d).size() >= 2 && (t.neighbors(e.v) & d).size() >= 2;
  return b1 || keeps_gamma_b2(t, e.u, e.v, d) || keeps_gamma_b2(t, e.v, e.u, d);
}

std::optional<Vertex> leaf_outside_all(const Graph& t, const std::vector<VertexSet>& sets) {
  VertexSet some;
  for (VertexSet d : sets) some |= d;
  VertexSet out = leaves(t) - some;
  if (out.empty()) return std::nullopt;
  return out.first();
}

EdgeConditionReport edge_report(const Graph& t, const Edge& e, const std::vector<VertexSet>& sets) {
  EdgeConditionReport r{e, true, std::nullopt};
  for (VertexSet d : sets) {
    if (!inner_edge_condition_for_set(t, e, d)) {
      r.holds = false;
      r.failing_set = d;
      break;
    }
  }
  return r;
}

}  // namespace

bool inner_edge_condition_for_set(const Graph& t, const Edge& e, VertexSet d) {
  bool in_u = d.contains(e.u);
  bool in_v = d.contains(e.v);
  if (!in_u && !in_v) return true;
  if (in_u != in_v) {
    Vertex a = in_u ? e.u : e.v;
    Vertex b = in_u ? e.v : e.u;
    return private_neighborhood(t, a, d).contains(b);
  }
  bool sel_u = only(t.neighbors(e.u) & d, e.v);
  bool sel_v = only(t.neighbors(e.v) & d, e.u);
  if (!sel_u && !sel_v) return false;
  return (sel_u && selector_branch(t, e.u, e.v, d)) || (sel_v && selector_branch(t, e.v, e.u, d));
}

std::optional<Vertex> leaf_condition(const Graph& t) {
  require_tree(t);
  return leaf_outside_all(t, all_min_total_dominating_sets(t));
}

EdgeConditionReport inner_edge_condition(const Graph& t, const Edge& e) {
  if (!is_inner_edge(t, e)) {
    throw Error(ErrorCode::NotInnerEdge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  return edge_report(t, e, all_min_total_dominating_sets(t));
}

SdOneVerdict sd_one_verdict(const Graph& t) {
  require_tree(t);
  auto sets = all_min_total_dominating_sets(t);
  SdOneVerdict v;
  if (auto leaf = leaf_outside_all(t, sets)) {
    v.predicts_one = true;
    v.leaf = leaf;
    return v;
  }
  for (const Edge& e : structure_profile(t).inner_edges) {
    if (edge_report(t, e, sets).holds) {
      v.predicts_one = true;
      v.inner_edge = e;
      return v;
    }
  }
  return v;
}

bool predicts_sd_one(const Graph& t) { return sd_one_verdict(t).predicts_one; }

bool lemma2_sufficient(const Graph& g) {
  if (g.order() < 3) throw Error(ErrorCode::TooSmall, "needs at least 3 vertices");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
  auto profile = gamma_t_membership_profile(g);
  for (Vertex v : leaves(g)) {
    if (profile[v].in_none) return true;
  }
  for (const Edge& e : structure_profile(g).inner_edges) {
    if (profile[e.u].in_none && profile[e.v].in_none) return true;
  }
  return false;
}

bool lemma14_sufficient_sd_gt_one(const Graph& t) {
  require_tree(t);
  auto sets = all_min_total_dominating_sets(t);
  if (leaf_outside_all(t, sets)) return false;
  for (const Edge& e : structure_profile(t).inner_edges) {
    bool witnessed = false;
    for (VertexSet d : sets) {
      if (keeps_gamma_for_set(t, e, d)) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

bool longest_path_structure_holds(const Graph& tree) {
  VertexSet supports = support_vertices(tree);
  for (const auto& path : all_longest_paths(tree)) {
    if (path.size() < 6) return false;
    for (int end = 0; end < 2; ++end) {
      auto at = [&](std::size_t i) { return end == 0 ? path[i] : path[path.size() - 1 - i]; };
      if (tree.degree(at(1)) != 2 || tree.degree(at(2)) != 2) return false;
      if (supports.contains(at(3))) return false;
    }
  }
  return true;
}

}  // namespace tdmsd
