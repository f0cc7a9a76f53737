#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tdmsd/graph.hpp"

namespace tdmsd {

/// Outcome for one graph of a sweep.
struct SweepRecord {
  std::string graph6;
  bool pass = true;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string theorem_id;
  int order_lo = 0;
  int order_hi = 0;
  std::size_t graphs_checked = 0;
  /// Failing records in stream order (ascending order, then canonical code).
  std::vector<SweepRecord> failures;
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  /// Negative selects the theorem's default bound.
  int n_max = -1;
  int jobs = 1;
  /// Called once per graph, in stream order, after the sweep finishes.
  std::function<void(const SweepRecord&)> on_record;
};

/// Identifiers accepted by run_verification.
const std::vector<std::string>& theorem_ids();
/// Default upper order for a theorem. Throws UnknownTheorem.
int default_n_max(std::string_view theorem_id);

/// Sweeps the graphs the theorem quantifies over and evaluates its predicate
/// on each. The report does not depend on `jobs`. Throws UnknownTheorem, and
/// OutOfRange when n_max is outside what the theorem's generator supports.
VerificationReport run_verification(std::string_view theorem_id, const VerifyOptions& options = {});

/// Connected graphs of order n, generated once per process.
const std::vector<Graph>& connected_graphs_cached(int n);
/// Free trees of order n, generated once per process.
const std::vector<Graph>& trees_cached(int n);

/// Closed forms on paths and cycles.
int path_gamma_closed_form(int n);
int gamma_t_closed_form(int n);
/// 3 if n ≡ 2 (mod 4), 2 if n ≡ 3 (mod 4), 1 otherwise.
int path_cycle_sd_closed_form(int n);

}  // namespace tdmsd
