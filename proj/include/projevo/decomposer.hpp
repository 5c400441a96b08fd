// Copyright 2026 The projevo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Sparse Hamiltonians as interaction graphs, proper edge colorings of those
// graphs (Misra-Gries for d+1 colors, alternating-path recoloring for d
// colors on bipartite graphs) and the induced split of H into block-diagonal
// terms with 2x2 blocks.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "projevo/linalg.hpp"
#include "projevo/trotter.hpp"

namespace projevo {

using Vertex = std::int64_t;

struct Edge {
  Vertex u;
  Vertex v;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected weighted graph; edges stored with u < v, sorted.
class InteractionGraph {
public:
  InteractionGraph(Vertex vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {
    require(vertex_count_ >= 1, "InteractionGraph: need at least one vertex");
    for (auto& e : edges_) {
      require(e.u != e.v, "InteractionGraph: self-loop at vertex " + std::to_string(e.u));
      require(e.u >= 0 && e.v >= 0 && e.u < vertex_count_ && e.v < vertex_count_,
              "InteractionGraph: edge endpoint out of range");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      require(edges_[i - 1].u != edges_[i].u || edges_[i - 1].v != edges_[i].v,
              "InteractionGraph: multigraph (repeated edge " + std::to_string(edges_[i].u) + "-" +
                  std::to_string(edges_[i].v) + ")");
    }
    adjacency_.resize(static_cast<std::size_t>(vertex_count_));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      adjacency_[edges_[i].u].push_back({edges_[i].v, i});
      adjacency_[edges_[i].v].push_back({edges_[i].u, i});
    }
    for (const auto& a : adjacency_) max_degree_ = std::max(max_degree_, static_cast<int>(a.size()));
  }

  struct Incidence {
    Vertex neighbor;
    std::size_t edge;
  };

  [[nodiscard]] Vertex vertex_count() const noexcept { return vertex_count_; }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] int max_degree() const noexcept { return max_degree_; }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  [[nodiscard]] const std::vector<Incidence>& incident(Vertex v) const { return adjacency_[v]; }

  [[nodiscard]] std::optional<std::size_t> find_edge(Vertex a, Vertex b) const {
    for (const auto& inc : adjacency_[a])
      if (inc.neighbor == b) return inc.edge;
    return std::nullopt;
  }

  /// Two-coloring of the vertices if the graph is bipartite.
  [[nodiscard]] std::optional<std::vector<int>> bipartition() const {
    std::vector<int> side(static_cast<std::size_t>(vertex_count_), -1);
    for (Vertex s = 0; s < vertex_count_; ++s) {
      if (side[s] != -1) continue;
      side[s] = 0;
      std::queue<Vertex> q;
      q.push(s);
      while (!q.empty()) {
        const Vertex x = q.front();
        q.pop();
        for (const auto& inc : adjacency_[x]) {
          if (side[inc.neighbor] == -1) {
            side[inc.neighbor] = 1 - side[x];
            q.push(inc.neighbor);
          } else if (side[inc.neighbor] == side[x]) {
            return std::nullopt;
          }
        }
      }
    }
    return side;
  }

private:
  Vertex vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  int max_degree_ = 0;
};

enum class ColoringMethod { kMisraGries, kBipartite, kChainParity };

struct EdgeColoring {
  std::vector<int> colors;  ///< one entry per graph edge, in graph edge order
  int color_count = 0;
  ColoringMethod method = ColoringMethod::kMisraGries;
  std::vector<std::string> names;  ///< optional display name per color

  [[nodiscard]] std::string name(int c) const {
    if (static_cast<std::size_t>(c) < names.size()) return names[c];
    return "color" + std::to_string(c);
  }

  [[nodiscard]] bool is_proper(const InteractionGraph& g) const {
    if (colors.size() != g.edge_count()) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::vector<int> seen;
      for (const auto& inc : g.incident(v)) {
        const int c = colors[inc.edge];
        if (c < 0 || c >= color_count) return false;
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) return false;
        seen.push_back(c);
      }
    }
    return true;
  }
};

namespace detail {

/// Edge colors plus, per vertex, which neighbor holds each color.
class ColorTable {
public:
  ColorTable(const InteractionGraph& g, int palette)
      : g_(g), palette_(palette), color_(g.edge_count(), -1),
        holder_(static_cast<std::size_t>(g.vertex_count()), std::vector<Vertex>(static_cast<std::size_t>(palette), -1)) {}

  [[nodiscard]] bool is_free(Vertex v, int c) const { return holder_[v][c] == -1; }
  [[nodiscard]] Vertex holder(Vertex v, int c) const { return holder_[v][c]; }
  [[nodiscard]] int color(std::size_t e) const { return color_[e]; }

  [[nodiscard]] int first_free(Vertex v) const {
    for (int c = 0; c < palette_; ++c)
      if (is_free(v, c)) return c;
    throw Error("edge coloring: no free color (palette exhausted)");
  }

  void set(std::size_t e, int c) {
    const Edge& ed = g_.edges()[e];
    if (color_[e] != -1) {
      holder_[ed.u][color_[e]] = -1;
      holder_[ed.v][color_[e]] = -1;
    }
    color_[e] = c;
    if (c != -1) {
      holder_[ed.u][c] = ed.v;
      holder_[ed.v][c] = ed.u;
    }
  }

  /// Swaps colors a and b along the maximal path leaving `start` through its
  /// a-colored edge.
  void flip_path(Vertex start, int a, int b) {
    std::vector<std::size_t> path;
    Vertex cur = start;
    int want = a;
    // `start` has b free, so the two-colored component through it is a path.
    while (true) {
      const Vertex next = holder_[cur][want];
      if (next == -1) break;
      path.push_back(*g_.find_edge(cur, next));
      cur = next;
      want = (want == a) ? b : a;
    }
    std::vector<int> old;
    for (auto e : path) old.push_back(color_[e]);
    for (auto e : path) set(e, -1);
    for (std::size_t i = 0; i < path.size(); ++i) set(path[i], old[i] == a ? b : a);
  }

  [[nodiscard]] std::vector<int> colors() const { return color_; }

private:
  const InteractionGraph& g_;
  int palette_;
  std::vector<int> color_;
  std::vector<std::vector<Vertex>> holder_;
};

inline EdgeColoring finish(const std::vector<int>& colors, ColoringMethod method) {
  EdgeColoring out;
  out.colors = colors;
  out.method = method;
  for (int c : colors) out.color_count = std::max(out.color_count, c + 1);
  return out;
}

}  // namespace detail

/// Misra-Gries: at most d+1 colors on any simple graph. Edges are colored
/// in the graph's sorted order, so the result is a pure function of g.
inline EdgeColoring color_edges_misra_gries(const InteractionGraph& g) {
  detail::ColorTable table(g, g.max_degree() + 1);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Vertex x = g.edges()[e].u;
    // Maximal fan of x starting at the uncolored edge's other end.
    std::vector<Vertex> fan{g.edges()[e].v};
    for (bool extended = true; extended;) {
      extended = false;
      for (const auto& inc : g.incident(x)) {
        const int c = table.color(inc.edge);
        if (c == -1 || std::find(fan.begin(), fan.end(), inc.neighbor) != fan.end()) continue;
        if (table.is_free(fan.back(), c)) {
          fan.push_back(inc.neighbor);
          extended = true;
        }
      }
    }
    const int c = table.first_free(x);
    const int d = table.first_free(fan.back());
    if (c != d) table.flip_path(x, d, c);
    // After the flip some prefix of the fan ends at a vertex with d free.
    std::size_t w = 0;
    while (w < fan.size() && !table.is_free(fan[w], d)) ++w;
    if (w == fan.size()) throw Error("misra-gries: no fan vertex with the free color");
    for (std::size_t i = 0; i < w; ++i) {
      const std::size_t next = *g.find_edge(x, fan[i + 1]);
      const int shifted = table.color(next);
      table.set(next, -1);
      table.set(*g.find_edge(x, fan[i]), shifted);
    }
    table.set(*g.find_edge(x, fan[w]), d);
  }
  return detail::finish(table.colors(), ColoringMethod::kMisraGries);
}

/// d colors on a bipartite graph by alternating-path recoloring; nullopt if
/// g is not bipartite.
inline std::optional<EdgeColoring> color_edges_bipartite(const InteractionGraph& g) {
  if (!g.bipartition()) return std::nullopt;
  const int palette = std::max(1, g.max_degree());
  detail::ColorTable table(g, palette);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Vertex u = g.edges()[e].u, v = g.edges()[e].v;
    const int a = table.first_free(u);
    if (!table.is_free(v, a)) {
      const int b = table.first_free(v);
      // The a/b path from v cannot reach u in a bipartite graph.
      table.flip_path(v, a, b);
    }
    table.set(e, a);
  }
  return detail::finish(table.colors(), ColoringMethod::kBipartite);
}

struct ColoringOptions {
  bool bipartite_fast_path = true;
};

inline EdgeColoring color_edges(const InteractionGraph& g, const ColoringOptions& opts = {}) {
  if (opts.bipartite_fast_path) {
    if (auto c = color_edges_bipartite(g)) return *c;
  }
  return color_edges_misra_gries(g);
}

/// Hamiltonian matrix together with its interaction graph.
struct LatticeHamiltonian {
  Matrix h;
  InteractionGraph graph;
};

/// Weighted graph Laplacian: diagonal = weighted degree, off-diagonal -w.
inline Matrix graph_laplacian(const InteractionGraph& g) {
  Matrix h = Matrix::Zero(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    h(e.u, e.v) -= e.weight;
    h(e.v, e.u) -= e.weight;
    h(e.u, e.u) += e.weight;
    h(e.v, e.v) += e.weight;
  }
  return h;
}

/// 1D lattice Laplacian, diagonal 2 and -1 between neighbours. Periodic
/// chains need L >= 3 (L = 2 would double the single edge).
inline LatticeHamiltonian laplacian_chain(Vertex length, bool periodic) {
  require(length >= 2, "laplacian_chain: L must be >= 2");
  require(!(periodic && length == 2), "laplacian_chain: periodic L = 2 is a multigraph");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < length; ++i) edges.push_back({i, i + 1, 1.0});
  if (periodic) edges.push_back({0, length - 1, 1.0});
  InteractionGraph g(length, std::move(edges));
  Matrix h = Matrix::Zero(length, length);
  for (Vertex i = 0; i < length; ++i) h(i, i) = 2.0;
  for (const auto& e : g.edges()) h(e.u, e.v) = h(e.v, e.u) = -1.0;
  return {std::move(h), std::move(g)};
}

/// Site index of the left end of a chain bond (L-1 for the wrap-around bond).
inline Vertex chain_left_site(const Edge& e, Vertex length) {
  return (e.u == 0 && e.v == length - 1 && length > 2) ? e.v : e.u;
}

/// Even/odd split of a chain: a bond's color is the last bit of its left
/// site. Odd periodic chains are rejected; they need a third color.
inline EdgeColoring chain_parity_coloring(const InteractionGraph& g, bool periodic) {
  const Vertex length = g.vertex_count();
  require(!(periodic && length % 2 == 1),
          "chain_parity_coloring: odd periodic chain is not 2-colorable; use color_edges");
  EdgeColoring out;
  out.method = ColoringMethod::kChainParity;
  out.names = {"even", "odd"};
  for (const auto& e : g.edges()) {
    require(e.v == e.u + 1 || (periodic && e.u == 0 && e.v == length - 1),
            "chain_parity_coloring: graph is not a chain");
    out.colors.push_back(static_cast<int>(chain_left_site(e, length) & 1));
  }
  for (int c : out.colors) out.color_count = std::max(out.color_count, c + 1);
  return out;
}

/// Honeycomb lattice of lx * ly two-site cells with graph-Laplacian
/// Hamiltonian. Site A(i,j) = 2(i + lx j), B(i,j) = A(i,j) + 1; A bonds to
/// B(i,j), B(i-1,j) and B(i,j-1).
inline LatticeHamiltonian honeycomb(Vertex lx, Vertex ly, bool periodic) {
  require(lx >= 1 && ly >= 1, "honeycomb: cell counts must be >= 1");
  require(!periodic || (lx >= 2 && ly >= 2),
          "honeycomb: periodic lattice needs at least 2 cells per direction");
  auto a_site = [&](Vertex i, Vertex j) { return 2 * (i + lx * j); };
  std::vector<Edge> edges;
  for (Vertex j = 0; j < ly; ++j) {
    for (Vertex i = 0; i < lx; ++i) {
      const Vertex a = a_site(i, j);
      edges.push_back({a, a + 1, 1.0});
      if (i > 0 || periodic) edges.push_back({a, a_site((i + lx - 1) % lx, j) + 1, 1.0});
      if (j > 0 || periodic) edges.push_back({a, a_site(i, (j + ly - 1) % ly) + 1, 1.0});
    }
  }
  InteractionGraph g(2 * lx * ly, std::move(edges));
  Matrix h = graph_laplacian(g);
  return {std::move(h), std::move(g)};
}

/// One color class as a Hermitian matrix made of disjoint 2x2 blocks.
struct BlockTerm {
  int color;
  std::string label;
  Matrix matrix;
  std::vector<std::pair<Vertex, Vertex>> blocks;
  std::vector<Vertex> untouched;
};

struct Decomposition {
  std::vector<BlockTerm> blocks;
  /// Whatever diagonal is left once every bond has taken its share; present
  /// only when nonzero (e.g. the end sites of an open chain).
  std::optional<Matrix> diagonal;

  [[nodiscard]] HermitianTermSet term_set() const {
    std::vector<Term> terms;
    Eigen::Index dim = 0;
    for (const auto& b : blocks) {
      terms.push_back({b.label, b.matrix});
      dim = b.matrix.rows();
    }
    if (diagonal) {
      terms.push_back({"diagonal", *diagonal});
      dim = diagonal->rows();
    }
    return {dim, std::move(terms)};
  }
};

inline constexpr double kDiagonalRemainderTolerance = 1e-12;

/// Splits H into one block-diagonal term per color. The bond (u, v) with
/// H(u, v) = h contributes the block [[|h|, h], [conj(h), |h|]] (2|h| times a
/// rank-one projector); diagonal entries not consumed this way form an extra
/// diagonal term.
inline Decomposition decompose(const Matrix& h, const InteractionGraph& g, const EdgeColoring& coloring) {
  const Vertex n = g.vertex_count();
  require(h.rows() == n && h.cols() == n, "decompose: matrix and graph sizes differ");
  require(is_hermitian(h, kHermitianTolerance), "decompose: matrix is not Hermitian");
  require(coloring.colors.size() == g.edge_count(), "decompose: coloring does not match graph");
  require(coloring.is_proper(g), "decompose: coloring is not proper");
  for (Vertex j = 0; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      const bool nonzero = h(i, j) != cplx{};
      const bool edge = g.find_edge(i, j).has_value();
      if (nonzero != edge) {
        throw ValidationError("decompose: support mismatch at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      }
    }
  }
  Decomposition out;
  std::vector<double> remainder(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) remainder[i] = h(i, i).real();
  for (int c = 0; c < coloring.color_count; ++c) {
    BlockTerm term{c, coloring.name(c), Matrix::Zero(n, n), {}, {}};
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (coloring.colors[e] != c) continue;
      const Edge& ed = g.edges()[e];
      const cplx off = h(ed.u, ed.v);
      const double share = std::abs(off);
      term.matrix(ed.u, ed.u) = share;
      term.matrix(ed.v, ed.v) = share;
      term.matrix(ed.u, ed.v) = off;
      term.matrix(ed.v, ed.u) = std::conj(off);
      remainder[ed.u] -= share;
      remainder[ed.v] -= share;
      used[ed.u] = used[ed.v] = true;
      term.blocks.emplace_back(ed.u, ed.v);
    }
    for (Vertex v = 0; v < n; ++v)
      if (!used[v]) term.untouched.push_back(v);
    if (!term.blocks.empty()) out.blocks.push_back(std::move(term));
  }
  const bool any = std::any_of(remainder.begin(), remainder.end(),
                               [](double r) { return std::abs(r) > kDiagonalRemainderTolerance; });
  if (any || out.blocks.empty()) {
    Matrix d = Matrix::Zero(n, n);
    for (Vertex i = 0; i < n; ++i) d(i, i) = remainder[i];
    out.diagonal = std::move(d);
  }
  return out;
}

struct ColorBlocks {
  int color;
  std::string name;
  std::vector<std::pair<Vertex, Vertex>> blocks;  ///< block index -> vertex pair
};

/// Block address table: for each color, its blocks in sorted order.
inline std::vector<ColorBlocks> block_labels(const InteractionGraph& g, const EdgeColoring& coloring) {
  require(coloring.is_proper(g), "block_labels: coloring is not proper");
  std::vector<ColorBlocks> out;
  for (int c = 0; c < coloring.color_count; ++c) {
    ColorBlocks cb{c, coloring.name(c), {}};
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (coloring.colors[e] == c) cb.blocks.emplace_back(g.edges()[e].u, g.edges()[e].v);
    out.push_back(std::move(cb));
  }
  return out;
}

}  // namespace projevo
