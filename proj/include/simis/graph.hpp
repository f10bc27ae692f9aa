#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simis/clutter.hpp"
#include "simis/errors.hpp"
#include "simis/monomial.hpp"
#include "simis/vertex_set.hpp"

namespace simis {

/// A simple undirected graph on vertices 1..n.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;

  /// Edges are normalized to (smaller, larger) and sorted. Loops, repeated
  /// edges and out-of-range vertices are rejected.
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adj_(n, 0) {
    if (n > kMaxVertices) throw ResourceError("graphs are limited to 64 vertices");
    for (auto& [a, b] : edges) {
      if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n || static_cast<std::size_t>(b) > n) {
        throw ArgumentError("graph edge {" + std::to_string(a) + "," + std::to_string(b) + "} out of range");
      }
      if (a == b) throw ArgumentError("graph loops are not allowed");
      if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw ArgumentError("graph multi-edges are not allowed");
    }
    for (auto [a, b] : edges) {
      adj_[a - 1] |= vertex_bit(b);
      adj_[b - 1] |= vertex_bit(a);
    }
    edges_ = std::move(edges);
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  VertexMask neighbors(int v) const { return adj_[v - 1]; }
  int degree(int v) const { return popcount(adj_[v - 1]); }
  bool adjacent(int a, int b) const { return (adj_[a - 1] & vertex_bit(b)) != 0; }

  VertexMask isolated_vertices() const {
    VertexMask m = 0;
    for (std::size_t v = 1; v <= n_; ++v) {
      if (adj_[v - 1] == 0) m |= vertex_bit(v);
    }
    return m;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
};

/// G minus the vertices in `removed`; survivors are relabelled 1.. in order.
inline Graph remove_vertices(const Graph& g, VertexMask removed) {
  std::vector<int> new_label(g.num_vertices() + 1, 0);
  int next = 1;
  for (std::size_t v = 1; v <= g.num_vertices(); ++v) {
    if (!(removed & vertex_bit(v))) new_label[v] = next++;
  }
  std::vector<Graph::Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (new_label[a] && new_label[b]) edges.emplace_back(new_label[a], new_label[b]);
  }
  return Graph(static_cast<std::size_t>(next - 1), std::move(edges));
}

inline Graph complement(const Graph& g) {
  std::vector<Graph::Edge> edges;
  const int n = static_cast<int>(g.num_vertices());
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (!g.adjacent(a, b)) edges.emplace_back(a, b);
    }
  }
  return Graph(g.num_vertices(), std::move(edges));
}

namespace detail {
inline VertexMask edge_complement(const Graph& g, const Graph::Edge& e) {
  return full_mask(g.num_vertices()) & ~(vertex_bit(e.first) | vertex_bit(e.second));
}
}  // namespace detail

/// I_c(G): one generator per edge, the product of the variables off that edge.
inline MonomialIdeal complementary_edge_ideal(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (g.num_edges() > 0 && n < 3) {
    throw ArgumentError("complementary_edge_ideal: a graph with an edge needs at least 3 vertices");
  }
  std::vector<Monomial> gens;
  for (const auto& e : g.edges()) gens.push_back(Monomial::squarefree(n, detail::edge_complement(g, e)));
  return minimalize(std::move(gens), n);
}

/// The (n-2)-uniform clutter whose edges are the complements of G's edges.
inline Clutter clutter_of_graph(const Graph& g) {
  if (g.num_edges() == 0) throw ArgumentError("clutter_of_graph: graph has no edges");
  if (g.num_vertices() < 3) throw ArgumentError("clutter_of_graph: graph needs at least 3 vertices");
  std::vector<VertexMask> edges;
  for (const auto& e : g.edges()) edges.push_back(detail::edge_complement(g, e));
  return Clutter(g.num_vertices(), std::move(edges));
}

/// G_H for an (n-2)-uniform clutter H: the complements of H's edges.
inline Graph associated_graph(const Clutter& h) {
  const std::size_t n = h.num_vertices();
  if (n < 3) throw ArgumentError("associated_graph: clutter needs at least 3 vertices");
  std::vector<Graph::Edge> edges;
  for (VertexMask e : h.edges()) {
    if (popcount(e) != static_cast<int>(n) - 2) {
      throw ArgumentError("associated_graph: clutter is not (n-2)-uniform");
    }
    auto pair = labels_of(full_mask(n) & ~e);
    edges.emplace_back(pair[0], pair[1]);
  }
  return Graph(n, std::move(edges));
}

/// Prime components of I_c(G): isolated vertices, non-edges, and triangles.
/// Non-edges through an isolated vertex are dropped because the singleton
/// prime of that vertex already lies inside them, so the result is exactly
/// the set of minimal primes. Sorted by mask.
inline std::vector<PrimeSupport> primary_decomposition_cx(const Graph& g) {
  if (g.num_edges() == 0) throw ArgumentError("primary_decomposition_cx: graph has no edges");
  const std::size_t n = g.num_vertices();
  const int ni = static_cast<int>(n);
  const VertexMask isolated = g.isolated_vertices();
  std::vector<VertexMask> parts;
  for (int v = 1; v <= ni; ++v) {
    if (isolated & vertex_bit(v)) parts.push_back(vertex_bit(v));
  }
  for (int a = 1; a <= ni; ++a) {
    for (int b = a + 1; b <= ni; ++b) {
      VertexMask pair = vertex_bit(a) | vertex_bit(b);
      if (!g.adjacent(a, b) && !(pair & isolated)) parts.push_back(pair);
    }
  }
  for (int a = 1; a <= ni; ++a) {
    for (int b = a + 1; b <= ni; ++b) {
      for (int c = b + 1; c <= ni; ++c) {
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) {
          parts.push_back(vertex_bit(a) | vertex_bit(b) | vertex_bit(c));
        }
      }
    }
  }
  std::sort(parts.begin(), parts.end());

  std::vector<PrimeSupport> primes;
  std::optional<MonomialIdeal> meet;
  for (VertexMask p : parts) {
    primes.emplace_back(p, n);
    auto prime_ideal = prime_power(primes.back(), 1, n);
    meet = meet ? intersect(*meet, prime_ideal) : prime_ideal;
  }
  if (!meet || !(*meet == complementary_edge_ideal(g))) {
    throw std::logic_error("primary_decomposition_cx: components do not intersect to I_c(G)");
  }
  return primes;
}

// ---------------------------------------------------------------------------
// Isomorphism

inline constexpr std::size_t kMaxIsoVertices = 8;

/// Canonical labelling: vertices are grouped by an isomorphism-invariant
/// key (degree, then sorted neighbour degrees), and the adjacency bitstring
/// is minimized over all orderings that respect those groups.
struct CanonicalForm {
  std::size_t n = 0;
  std::uint64_t code = 0;  // upper-triangle adjacency, pair (1,2) most significant
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

inline std::uint64_t adjacency_code(const Graph& g, const std::vector<int>& order) {
  std::uint64_t code = 0;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
  }
  return code;
}

inline std::pair<CanonicalForm, std::vector<int>> canonical_labelling(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxIsoVertices) {
    throw ResourceError("graph isomorphism is limited to " + std::to_string(kMaxIsoVertices) + " vertices");
  }
  using Key = std::vector<int>;
  std::vector<std::pair<Key, int>> keyed;
  for (int v = 1; v <= static_cast<int>(n); ++v) {
    Key key{g.degree(v)};
    std::vector<int> nd;
    for (int u : labels_of(g.neighbors(v))) nd.push_back(g.degree(u));
    std::sort(nd.rbegin(), nd.rend());
    key.insert(key.end(), nd.begin(), nd.end());
    keyed.emplace_back(std::move(key), v);
  }
  // Descending keys put high-degree vertices first and isolated ones last.
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });

  std::vector<int> order;
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // [begin, end) of equal keys
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  for (const auto& kv : keyed) order.push_back(kv.second);

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_order = order;
  auto permute = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      std::uint64_t code = adjacency_code(g, order);
      if (code < best) {
        best = code;
        best_order = order;
      }
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(cells[cell].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(cells[cell].second);
    std::sort(first, last);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(first, last));
  };
  permute(permute, 0);
  return {CanonicalForm{n, n < 2 ? 0 : best}, best_order};
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) { return detail::canonical_labelling(g).first; }

/// The graph relabelled so that position i of the canonical order becomes vertex i.
inline Graph canonical_graph(const Graph& g) {
  auto order = detail::canonical_labelling(g).second;
  std::vector<int> new_label(g.num_vertices() + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) new_label[order[i]] = static_cast<int>(i) + 1;
  std::vector<Graph::Edge> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(new_label[a], new_label[b]);
  return Graph(g.num_vertices(), std::move(edges));
}

inline bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() > kMaxIsoVertices || b.num_vertices() > kMaxIsoVertices) {
    throw ResourceError("graph isomorphism is limited to " + std::to_string(kMaxIsoVertices) + " vertices");
  }
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  auto degrees = [](const Graph& g) {
    std::vector<int> d;
    for (int v = 1; v <= static_cast<int>(g.num_vertices()); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

inline constexpr std::size_t kMaxEnumerationVertices = 7;

/// One canonical representative per isomorphism class of graphs on n
/// vertices, ordered by edge count and then canonical code.
inline std::vector<Graph> enumerate_graphs_upto_iso(std::size_t n, bool require_edge) {
  if (n < 1 || n > kMaxEnumerationVertices) {
    throw ArgumentError("enumerate_graphs_upto_iso: n must be in 1.." + std::to_string(kMaxEnumerationVertices));
  }
  // Every graph on k vertices is a class representative on k-1 vertices plus
  // one new vertex joined to some subset of the old ones.
  std::vector<Graph> layer{Graph(1, {})};
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<std::pair<CanonicalForm, Graph>> seen;
    for (const auto& base : layer) {
      for (VertexMask nb = 0; nb <= full_mask(k - 1); ++nb) {
        auto edges = base.edges();
        for (int u : labels_of(nb)) edges.emplace_back(u, static_cast<int>(k));
        Graph g(k, std::move(edges));
        auto [form, order] = detail::canonical_labelling(g);
        seen.emplace_back(form, g);
      }
    }
    std::sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    seen.erase(std::unique(seen.begin(), seen.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
               seen.end());
    layer.clear();
    for (auto& [form, g] : seen) layer.push_back(canonical_graph(g));
  }
  std::vector<Graph> out;
  for (auto& g : layer) {
    if (!require_edge || g.num_edges() > 0) out.push_back(std::move(g));
  }
  std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    if (a.num_edges() != b.num_edges()) return a.num_edges() < b.num_edges();
    return canonical_form(a) < canonical_form(b);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Classification

enum class GraphLabel { K2, K3, P3, TwoK2, P4, C4, Other };

inline std::string to_string(GraphLabel label) {
  switch (label) {
    case GraphLabel::K2: return "K2";
    case GraphLabel::K3: return "K3";
    case GraphLabel::P3: return "P3";
    case GraphLabel::TwoK2: return "2K2";
    case GraphLabel::P4: return "P4";
    case GraphLabel::C4: return "C4";
    case GraphLabel::Other: return "OTHER";
  }
  return "OTHER";
}

struct GraphClass {
  GraphLabel label = GraphLabel::Other;
  int isolated_count = 0;
  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

namespace graphs {

inline Graph path(int n) {
  std::vector<Graph::Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(static_cast<std::size_t>(n), std::move(e));
}

inline Graph cycle(int n) {
  auto e = path(n).edges();
  e.emplace_back(1, n);
  return Graph(static_cast<std::size_t>(n), std::move(e));
}

inline Graph complete(int n) {
  std::vector<Graph::Edge> e;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) e.emplace_back(a, b);
  }
  return Graph(static_cast<std::size_t>(n), std::move(e));
}

/// Star with centre 1 and leaves 2..leaves+1.
inline Graph star(int leaves) {
  std::vector<Graph::Edge> e;
  for (int i = 2; i <= leaves + 1; ++i) e.emplace_back(1, i);
  return Graph(static_cast<std::size_t>(leaves + 1), std::move(e));
}

inline Graph two_k2() { return Graph(4, {{1, 2}, {3, 4}}); }
/// Triangle 1-2-3 with pendant edge 1-4.
inline Graph paw() { return Graph(4, {{1, 2}, {2, 3}, {1, 3}, {1, 4}}); }
/// K4 without the edge 2-4.
inline Graph diamond() { return Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}); }

/// Pads g with isolated vertices up to n.
inline Graph padded(const Graph& g, std::size_t n) { return Graph(n, g.edges()); }

inline Graph reference(GraphLabel label) {
  switch (label) {
    case GraphLabel::K2: return complete(2);
    case GraphLabel::K3: return complete(3);
    case GraphLabel::P3: return path(3);
    case GraphLabel::TwoK2: return two_k2();
    case GraphLabel::P4: return path(4);
    case GraphLabel::C4: return cycle(4);
    case GraphLabel::Other: break;
  }
  throw ArgumentError("no reference graph for OTHER");
}

inline constexpr std::array<GraphLabel, 6> kReferenceLabels{GraphLabel::K2,    GraphLabel::K3, GraphLabel::P3,
                                                           GraphLabel::TwoK2, GraphLabel::P4, GraphLabel::C4};

}  // namespace graphs

inline GraphClass classify_graph(const Graph& g) {
  const VertexMask isolated = g.isolated_vertices();
  GraphClass out{GraphLabel::Other, popcount(isolated)};
  const Graph core = remove_vertices(g, isolated);
  if (core.num_edges() == 0 || core.num_vertices() > 4) return out;
  for (GraphLabel label : graphs::kReferenceLabels) {
    if (graphs_isomorphic(core, graphs::reference(label))) {
      out.label = label;
      break;
    }
  }
  return out;
}

}  // namespace simis
