#include "tdmsd/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "tdmsd/error.hpp"

namespace tdmsd {

namespace {

// ---------------------------------------------------------------- trees ---

// Centers of a tree: the one or two vertices left after peeling leaves.
std::vector<Vertex> tree_centers(const Graph& tree) {
  int n = tree.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = tree.degree(v);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      deg[leaf] = 0;
      for (Vertex w : tree.neighbors(leaf)) {
        if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string ahu(const Graph& tree, std::span<const int> colors, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : tree.neighbors(v)) {
    if (w != parent) kids.push_back(ahu(tree, colors, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  out += static_cast<char>('a' + (colors.empty() ? 0 : colors[v]));
  for (const auto& k : kids) out += k;
  out += ')';
  return out;
}

std::string tree_code(const Graph& tree, std::span<const int> colors) {
  auto centers = tree_centers(tree);
  std::string out = "T";
  out += static_cast<char>(tree.order());
  if (centers.size() == 1) {
    out += 'c';
    out += ahu(tree, colors, centers[0], -1);
  } else {
    auto a = ahu(tree, colors, centers[0], centers[1]);
    auto b = ahu(tree, colors, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    out += 'e';
    out += a;
    out += b;
  }
  return out;
}

// -------------------------------------------------------- general graphs ---

using Coloring = std::array<int, kMaxVertices>;

class Canonizer {
public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  std::string run() {
    Coloring color{};
    initial_coloring(color);
    refine(color);
    search(color);
    std::string out = "G";
    out += static_cast<char>(n_);
    out += best_;
    return out;
  }

private:
  void initial_coloring(Coloring& color) const {
    std::vector<std::vector<int>> key(n_);
    std::vector<int> deg(n_);
    for (Vertex v = 0; v < n_; ++v) deg[v] = g_.degree(v);
    for (Vertex v = 0; v < n_; ++v) {
      auto& k = key[v];
      k.push_back(deg[v]);
      std::vector<int> nd;
      for (Vertex w : g_.neighbors(v)) nd.push_back(deg[w]);
      std::sort(nd.begin(), nd.end());
      k.insert(k.end(), nd.begin(), nd.end());
      k.push_back(-1);
      auto dist = bfs_distances(g_, v);
      std::sort(dist.begin(), dist.end());
      k.insert(k.end(), dist.begin(), dist.end());
    }
    assign_ranks(key, color);
  }

  // Replaces each colour by the rank of its key among the distinct keys.
  void assign_ranks(const std::vector<std::vector<int>>& key, Coloring& color) const {
    std::vector<Vertex> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return key[a] < key[b]; });
    int rank = 0;
    for (int i = 0; i < n_; ++i) {
      if (i > 0 && key[order[i]] != key[order[i - 1]]) ++rank;
      color[order[i]] = rank;
    }
  }

  static int count_colors(const Coloring& color, int n) {
    return n == 0 ? 0 : *std::max_element(color.begin(), color.begin() + n) + 1;
  }

  // Equitable refinement; colour order is preserved because each key starts
  // with the current colour.
  void refine(Coloring& color) const {
    int cells = count_colors(color, n_);
    std::vector<std::vector<int>> key(n_);
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        auto& k = key[v];
        k.clear();
        k.push_back(color[v]);
        for (Vertex w : g_.neighbors(v)) k.push_back(color[w]);
        std::sort(k.begin() + 1, k.end());
      }
      assign_ranks(key, color);
      int now = count_colors(color, n_);
      if (now == cells) return;
      cells = now;
    }
  }

  std::string leaf_code(const Coloring& color) const {
    std::array<Vertex, kMaxVertices> at{};
    for (Vertex v = 0; v < n_; ++v) at[color[v]] = v;
    std::string bits;
    bits.reserve(n_ * (n_ - 1) / 16 + 1);
    unsigned char acc = 0;
    int filled = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) {
        acc = static_cast<unsigned char>((acc << 1) | (g_.has_edge(at[i], at[j]) ? 1 : 0));
        if (++filled == 8) {
          bits += static_cast<char>(acc);
          acc = 0;
          filled = 0;
        }
      }
    }
    if (filled > 0) bits += static_cast<char>(acc << (8 - filled));
    return bits;
  }

  bool twins(Vertex a, Vertex b) const {
    VertexSet na = g_.neighbors(a);
    VertexSet nb = g_.neighbors(b);
    na.erase(b);
    nb.erase(a);
    return na == nb;
  }

  void search(const Coloring& color) {
    // First non-singleton cell by colour order.
    std::array<int, kMaxVertices> cell_size{};
    for (Vertex v = 0; v < n_; ++v) ++cell_size[color[v]];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      auto code = leaf_code(color);
      if (!have_best_ || code > best_) {
        best_ = std::move(code);
        have_best_ = true;
      }
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      // Swapping twins is an automorphism fixing the current partition, so
      // their subtrees yield the same leaf codes.
      bool skip = std::any_of(tried.begin(), tried.end(), [&](Vertex w) { return twins(v, w); });
      if (skip) continue;
      tried.push_back(v);
      Coloring next = color;
      // v gets colour `target`, the rest of its cell and all later cells shift up.
      for (Vertex w = 0; w < n_; ++w) {
        if (w != v && color[w] >= target) ++next[w];
      }
      refine(next);
      search(next);
    }
  }

  const Graph& g_;
  int n_;
  std::string best_;
  bool have_best_ = false;
};

}  // namespace

std::string canonical_code(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw Error(ErrorCode::TooLarge,
                "canonical code cap is " + std::to_string(cap) + ", graph has " + std::to_string(g.order()));
  }
  if (is_tree(g)) return tree_code(g, {});
  return Canonizer(g).run();
}

std::string colored_tree_code(const Graph& tree, std::span<const int> colors) {
  if (!is_tree(tree)) throw Error(ErrorCode::NotATree, "colored_tree_code needs a tree");
  return tree_code(tree, colors);
}

std::string to_hex(const std::string& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += kDigits[c >> 4];
    out += kDigits[c & 15];
  }
  return out;
}

}  // namespace tdmsd
