#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdmsd/canonical.hpp"
#include "tdmsd/characterization.hpp"
#include "tdmsd/domination.hpp"
#include "tdmsd/enumeration.hpp"
#include "tdmsd/error.hpp"
#include "tdmsd/io.hpp"
#include "tdmsd/subdivision.hpp"
#include "tdmsd/tree_family.hpp"
#include "tdmsd/verify.hpp"

namespace tdmsd::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput:
    case ErrorCode::UnknownTheorem:
    case ErrorCode::OutOfRange:
      return kExitUsage;
    default:
      return kExitPrecondition;
  }
}

/// `input` is a file path when such a file exists, otherwise a graph6 line.
std::vector<Graph> load_input(const std::string& input) {
  std::error_code ec;
  if (fs::is_regular_file(input, ec)) return read_graph_file(input);
  return parse_graphs(input, GraphFormat::Graph6);
}

json vertex_list(VertexSet s) { return s.to_vector(); }

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

std::string from_hex(const std::string& hex) {
  std::string out;
  for (std::size_t i = 0; i + 1 < hex.size(); i += 2) {
    out += static_cast<char>(std::stoi(hex.substr(i, 2), nullptr, 16));
  }
  return out;
}

// Persistent γt memo under $TDMSD_CACHE_DIR/gamma_t.tsv ("hexcode<TAB>value").
class PersistentCache {
public:
  PersistentCache() {
    const char* dir = std::getenv("TDMSD_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return;
    path_ = fs::path(dir) / "gamma_t.tsv";
    std::ifstream in(*path_);
    std::string hex;
    int value = 0;
    while (in >> hex >> value) cache_.insert(from_hex(hex), value);
  }

  ~PersistentCache() {
    if (!path_) return;
    std::error_code ec;
    fs::create_directories(path_->parent_path(), ec);
    std::ofstream out(*path_, std::ios::trunc);
    std::vector<std::pair<std::string, int>> rows(cache_.entries().begin(), cache_.entries().end());
    std::sort(rows.begin(), rows.end());
    for (const auto& [code, value] : rows) out << to_hex(code) << '\t' << value << '\n';
  }

  InvariantCache* get() { return &cache_; }

private:
  std::optional<fs::path> path_;
  InvariantCache cache_{DominationKind::TotalDomination};
};

class Output {
public:
  Output(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::trunc);
      if (!file_) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
    }
  }
  std::ostream& stream(std::ostream& fallback) { return file_.is_open() ? file_ : fallback; }

private:
  std::ofstream file_;
};

json subdivision_json(const std::string& invariant, const Graph& g, const SubdivisionResult& r, int cap) {
  json j;
  j["invariant"] = invariant;
  j["graph6"] = to_graph6(g);
  j["value"] = r.value ? json(*r.value) : json(nullptr);
  j["exceeds_cap"] = r.exceeds_cap();
  j["cap"] = cap;
  json witness = json::object();
  json edges = json::array();
  for (const Edge& e : r.witness_edges) edges.push_back(edge_json(e));
  witness["edges"] = edges;
  witness["t"] = r.witness_t;
  witness["increased_value"] = r.increased_value ? json(*r.increased_value) : json(nullptr);
  j["witness"] = witness;
  j["base_value"] = r.base_value;
  return j;
}

json compute_one(const Graph& g, const std::string& invariant, std::optional<int> cap, InvariantCache* cache) {
  if (invariant == "gamma" || invariant == "gamma_t") {
    auto cert = invariant == "gamma" ? gamma(g) : gamma_t(g);
    return {{"invariant", invariant},
            {"graph6", to_graph6(g)},
            {"value", cert.value},
            {"witness", vertex_list(cert.witness)},
            {"base_value", nullptr}};
  }
  if (invariant == "msd_t") {
    int c = cap.value_or(kDefaultMsdCap);
    return subdivision_json(invariant, g, msd_gamma_t(g, c, cache), c);
  }
  if (invariant == "sd_t") {
    int c = cap.value_or(g.size());
    return subdivision_json(invariant, g, sd_gamma_t(g, c, cache), c);
  }
  if (invariant == "msd") {
    int c = cap.value_or(kDefaultMsdCap);
    return subdivision_json(invariant, g, msd_gamma(g, c), c);
  }
  if (invariant == "sd") {
    int c = cap.value_or(g.size());
    return subdivision_json(invariant, g, sd_gamma(g, c), c);
  }
  throw Error(ErrorCode::MalformedInput, "unknown invariant " + invariant);
}

json report_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"graph6", f.graph6}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return {{"record", "summary"},
          {"theorem", r.theorem_id},
          {"orders_checked", json::array({r.order_lo, r.order_hi})},
          {"graphs_checked", r.graphs_checked},
          {"failures", failures},
          {"passed", r.passed()},
          {"elapsed", std::round(r.elapsed_seconds * 1000.0) / 1000.0}};
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Graph6) {
    out << to_graph6(g) << '\n';
  } else {
    write_edge_list(out, g);
  }
}

GraphFormat parse_format(const std::string& name) {
  if (name == "graph6") return GraphFormat::Graph6;
  if (name == "edge-list") return GraphFormat::EdgeList;
  throw Error(ErrorCode::MalformedInput, "unknown format " + name);
}

json characterize_one(const Graph& t) {
  auto verdict = sd_one_verdict(t);
  auto sd = sd_gamma_t(t);
  json j{{"graph6", to_graph6(t)}, {"order", t.order()}, {"predicts_sd_one", verdict.predicts_one}};
  if (verdict.leaf) {
    j["branch"] = "leaf";
    j["leaf"] = *verdict.leaf;
  } else if (verdict.inner_edge) {
    j["branch"] = "inner-edge";
    j["edge"] = edge_json(*verdict.inner_edge);
  } else {
    j["branch"] = "none";
  }
  j["sd_t"] = sd.value ? json(*sd.value) : json(nullptr);
  j["agrees"] = verdict.predicts_one == (sd.value == 1);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total domination subdivision and multisubdivision numbers"};
  app.require_subcommand(1);

  std::string input;
  std::string invariant;
  std::optional<int> cap;
  auto* compute = app.add_subcommand("compute", "Compute an invariant for each input graph");
  compute->add_option("--input", input, "Graph file (edge list or graph6) or a graph6 line")->required();
  compute->add_option("--invariant", invariant, "Invariant to compute")
      ->required()
      ->check(CLI::IsMember({"gamma", "gamma_t", "sd", "msd", "sd_t", "msd_t"}));
  compute->add_option("--cap", cap, "Largest subdivision count or edge-subset size to try");

  std::string theorem;
  int n_max = -1;
  int jobs = 1;
  bool verbose = false;
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Check a theorem on every graph up to an order");
  verify->add_option("--theorem", theorem, "Theorem identifier")->required();
  verify->add_option("--n-max", n_max, "Largest order to sweep (default per theorem)");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--verbose", verbose, "Emit one record per graph before the summary");
  verify->add_option("--out", out_path, "Write the report to a file");

  std::string format_name = "edge-list";
  auto* family = app.add_subcommand("family", "The family of trees with sd_t = 3");
  family->require_subcommand(1);
  auto* family_generate = family->add_subcommand("generate", "Emit every member up to an order");
  family_generate->add_option("--n-max", n_max, "Largest member order")->required();
  family_generate->add_option("--format", format_name, "edge-list or graph6");
  family_generate->add_option("--out", out_path, "Output file");
  auto* family_test = family->add_subcommand("test", "Decide membership of input trees");
  family_test->add_option("--input", input, "Graph file or graph6 line")->required();

  auto* characterize = app.add_subcommand("characterize", "Evaluate the sd_t = 1 tree characterization");
  characterize->add_option("--input", input, "Graph file or graph6 line");
  characterize->add_option("--n-max", n_max, "Sweep all trees of order 3..n-max instead of --input");

  std::string kind = "trees";
  int order = 0;
  auto* enumerate = app.add_subcommand("enum", "Enumerate graphs up to isomorphism");
  enumerate->add_option("--kind", kind, "trees or connected")->check(CLI::IsMember({"trees", "connected"}));
  enumerate->add_option("--n", order, "Order")->required();
  enumerate->add_option("--format", format_name, "edge-list or graph6");
  enumerate->add_option("--out", out_path, "Output file");

  std::string fixture_dir = ".";
  auto* fixtures = app.add_subcommand("fixtures", "Write the named test graphs as edge lists");
  fixtures->add_option("--out", fixture_dir, "Output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*compute) {
      PersistentCache cache;
      for (const Graph& g : load_input(input)) out << compute_one(g, invariant, cap, cache.get()).dump() << '\n';
      return kExitPass;
    }
    if (*verify) {
      Output sink(out_path, out);
      std::ostream& os = sink.stream(out);
      VerifyOptions options;
      options.n_max = n_max;
      options.jobs = jobs;
      if (verbose) {
        options.on_record = [&](const SweepRecord& r) {
          os << json{{"record", "graph"},
                     {"graph6", r.graph6},
                     {"pass", r.pass},
                     {"expected", r.expected},
                     {"actual", r.actual}}
                    .dump()
             << '\n';
        };
      }
      auto report = run_verification(theorem, options);
      os << report_json(report).dump() << '\n';
      return report.passed() ? kExitPass : kExitTheoremViolated;
    }
    if (*family_generate) {
      GraphFormat format = parse_format(format_name);
      Output sink(out_path, out);
      std::ostream& os = sink.stream(out);
      for (const auto& m : generate_family(n_max)) {
        write_graph(os, m.tree, format);
        os << "status: " << m.status_string() << '\n';
      }
      return kExitPass;
    }
    if (*family_test) {
      for (const Graph& t : load_input(input)) {
        out << json{{"graph6", to_graph6(t)}, {"order", t.order()}, {"in_family", is_in_family(t)}}.dump()
            << '\n';
      }
      return kExitPass;
    }
    if (*characterize) {
      std::vector<Graph> trees;
      if (!input.empty()) {
        trees = load_input(input);
      } else if (n_max >= 3) {
        for (int n = 3; n <= n_max; ++n) {
          for (const Graph& t : enumerate_trees(n)) trees.push_back(t);
        }
      } else {
        err << "characterize needs --input or --n-max >= 3\n";
        return kExitUsage;
      }
      for (const Graph& t : trees) out << characterize_one(t).dump() << '\n';
      return kExitPass;
    }
    if (*enumerate) {
      GraphFormat format = parse_format(format_name);
      auto stream = kind == "trees" ? enumerate_trees(order) : enumerate_connected_graphs(order);
      Output sink(out_path, out);
      std::ostream& os = sink.stream(out);
      for (const Graph& g : stream) write_graph(os, g, format);
      return kExitPass;
    }
    if (*fixtures) {
      fs::create_directories(fixture_dir);
      const std::vector<std::pair<std::string, Graph>> named = {
          {"gstar", gstar_graph()}, {"k4", complete_graph(4)}, {"p6", path_graph(6)},
          {"c6", cycle_graph(6)},   {"k1_3", star_graph(4)},   {"w5", wheel_graph(6)}};
      for (const auto& [name, g] : named) {
        std::ofstream file(fs::path(fixture_dir) / (name + ".edges"), std::ios::trunc);
        write_edge_list(file, g);
        out << (fs::path(fixture_dir) / (name + ".edges")).string() << '\n';
      }
      return kExitPass;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace tdmsd::cli
