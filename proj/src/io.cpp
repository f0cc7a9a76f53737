#include "tdmsd/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "tdmsd/error.hpp"

namespace tdmsd {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto pos = text.find('\n');
    lines.push_back(trim(text.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return lines;
}

bool skippable(std::string_view line) {
  return line.empty() || line.front() == '#' || line.starts_with("status:");
}

// Parses whitespace-separated integers; false on anything else.
bool parse_ints(std::string_view line, std::vector<long>& out) {
  out.clear();
  while (true) {
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty()) return true;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc{}) return false;
    out.push_back(value);
    line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
    if (!line.empty() && line.front() != ' ' && line.front() != '\t') return false;
  }
}

std::vector<Graph> parse_edge_lists(std::string_view text) {
  std::vector<Graph> out;
  auto lines = split_lines(text);
  std::vector<long> nums;
  std::size_t i = 0;
  auto next_line = [&]() -> std::string_view {
    while (i < lines.size() && skippable(lines[i])) ++i;
    return i < lines.size() ? lines[i++] : std::string_view{};
  };
  while (true) {
    auto header = next_line();
    if (header.empty()) break;
    if (!parse_ints(header, nums) || nums.size() != 2 || nums[0] < 1 || nums[1] < 0) {
      throw Error(ErrorCode::MalformedInput, "expected \"n m\" header, got \"" + std::string(header) + "\"");
    }
    int n = static_cast<int>(nums[0]);
    long m = nums[1];
    std::vector<std::pair<int, int>> edges;
    for (long k = 0; k < m; ++k) {
      auto line = next_line();
      if (line.empty() || !parse_ints(line, nums) || nums.size() != 2) {
        throw Error(ErrorCode::MalformedInput, "expected edge line \"u v\"");
      }
      edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    }
    try {
      out.push_back(Graph::from_edge_list(n, edges));
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedInput, e.what());
    }
  }
  return out;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62) throw Error(ErrorCode::TooLarge, "graph6 writer handles n <= 62");
  std::string out;
  out += static_cast<char>(63 + n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

Graph from_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw Error(ErrorCode::MalformedInput, "empty graph6 line");
  for (char c : line) {
    if (c < 63 || c > 126) throw Error(ErrorCode::MalformedInput, "byte outside the graph6 alphabet");
  }
  int n = line[0] - 63;
  if (n > 62) throw Error(ErrorCode::MalformedInput, "multi-byte graph6 orders are not supported");
  if (n < 1) throw Error(ErrorCode::MalformedInput, "graph6 order must be positive");
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t expected = 1 + (bits + 5) / 6;
  if (line.size() != expected) {
    throw Error(ErrorCode::MalformedInput, "graph6 line has " + std::to_string(line.size()) +
                                               " bytes, expected " + std::to_string(expected));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = line[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

GraphFormat sniff_format(std::string_view text) {
  std::vector<long> nums;
  for (auto line : split_lines(text)) {
    if (skippable(line)) continue;
    return parse_ints(line, nums) && nums.size() == 2 ? GraphFormat::EdgeList : GraphFormat::Graph6;
  }
  return GraphFormat::Graph6;
}

std::vector<Graph> parse_graphs(std::string_view text) { return parse_graphs(text, sniff_format(text)); }

std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return parse_edge_lists(text);
  std::vector<Graph> out;
  for (auto line : split_lines(text)) {
    if (skippable(line)) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graphs(buf.str());
}

}  // namespace tdmsd
