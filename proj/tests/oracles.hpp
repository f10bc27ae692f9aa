#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's algorithms beyond its plain value types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "simis/graph.hpp"
#include "simis/incidence_matrix.hpp"
#include "simis/monomial.hpp"

namespace oracle {

using simis::Exponent;
using simis::Monomial;
using simis::VertexMask;

/// Every exponent vector in {0..max_exp}^n.
inline std::vector<Monomial> exponent_box(std::size_t n, Exponent max_exp) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(n, 0);
  while (true) {
    out.emplace_back(e);
    std::size_t i = 0;
    while (i < n && e[i] == max_exp) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  return out;
}

/// Every monomial in n variables of total degree <= d.
inline std::vector<Monomial> monomials_up_to_degree(std::size_t n, Exponent d) {
  std::vector<Monomial> out;
  for (auto& m : exponent_box(n, d)) {
    if (m.degree() <= d) out.push_back(m);
  }
  return out;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// Quadratic divisibility filter, sorted lexicographically.
inline std::vector<Monomial> minimal_elements(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Monomial> out;
  for (const auto& m : ms) {
    bool dominated = false;
    for (const auto& o : ms) {
      if (!(o == m) && divides(o, m)) dominated = true;
    }
    if (!dominated) out.push_back(m);
  }
  return out;
}

inline bool member(const std::vector<Monomial>& gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
}

/// Inclusion-minimal vertex sets meeting every support, by scanning all 2^n sets.
inline std::vector<VertexMask> minimal_covers(const std::vector<VertexMask>& supports, std::size_t n) {
  std::vector<VertexMask> covers;
  for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
    bool ok = std::all_of(supports.begin(), supports.end(), [s](VertexMask e) { return (e & s) != 0; });
    if (ok) covers.push_back(s);
  }
  std::vector<VertexMask> out;
  for (VertexMask c : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(), [c](VertexMask o) { return o != c && (o & c) == o; });
    if (minimal) out.push_back(c);
  }
  return out;
}

inline std::uint64_t degree_on(const Monomial& m, VertexMask vars) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if ((vars >> i) & 1U) d += m[i];
  }
  return d;
}

/// Generators of the k-th symbolic power of the squarefree ideal with the
/// given generators: scan {0..k}^n for monomials in every P_A^k.
inline std::vector<Monomial> symbolic_power(const std::vector<Monomial>& gens, std::size_t n, Exponent k) {
  std::vector<VertexMask> supports;
  for (const auto& g : gens) supports.push_back(g.support());
  auto primes = minimal_covers(supports, n);
  std::vector<Monomial> in;
  for (const auto& m : exponent_box(n, k)) {
    bool ok = std::all_of(primes.begin(), primes.end(), [&](VertexMask a) { return degree_on(m, a) >= k; });
    if (ok) in.push_back(m);
  }
  return minimal_elements(in);
}

/// Generators of I^k from all k-fold products of generators.
inline std::vector<Monomial> ordinary_power(const std::vector<Monomial>& gens, std::size_t n, unsigned k) {
  std::vector<Monomial> prods{Monomial(n)};
  for (unsigned step = 0; step < k; ++step) {
    std::vector<Monomial> next;
    for (const auto& p : prods) {
      for (const auto& g : gens) {
        std::vector<Exponent> e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = p[i] + g[i];
        next.emplace_back(e);
      }
    }
    prods = minimal_elements(next);
  }
  return prods;
}

inline int matching_number(const std::vector<VertexMask>& edges) {
  int best = 0;
  const std::size_t m = edges.size();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    VertexMask used = 0;
    bool disjoint = true;
    for (std::size_t i = 0; i < m && disjoint; ++i) {
      if (!((pick >> i) & 1U)) continue;
      disjoint = (used & edges[i]) == 0;
      used |= edges[i];
    }
    if (disjoint) best = std::max(best, std::popcount(pick));
  }
  return best;
}

inline int cover_number(const std::vector<VertexMask>& edges, std::size_t n) {
  int best = static_cast<int>(n);
  if (edges.empty()) return 0;
  for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
    if (std::all_of(edges.begin(), edges.end(), [s](VertexMask e) { return (e & s) != 0; })) {
      best = std::min(best, std::popcount(s));
    }
  }
  return best;
}

/// min alpha.x over x in {0..max_x}^n with Mx >= 1.
inline std::int64_t phi(const simis::IncidenceMatrix& m, const std::vector<std::int64_t>& alpha, int max_x) {
  const std::size_t n = m.cols();
  std::int64_t best = INT64_MAX;
  std::vector<int> x(n, 0);
  while (true) {
    bool feasible = true;
    for (std::size_t i = 0; i < m.rows() && feasible; ++i) {
      int s = 0;
      for (std::size_t j = 0; j < n; ++j) s += m.at(i, j) * x[j];
      feasible = s >= 1;
    }
    if (feasible) {
      std::int64_t cost = 0;
      for (std::size_t j = 0; j < n; ++j) cost += alpha[j] * x[j];
      best = std::min(best, cost);
    }
    std::size_t j = 0;
    while (j < n && x[j] == max_x) x[j++] = 0;
    if (j == n) break;
    ++x[j];
  }
  return best;
}

/// max sum(y) over the full box 0 <= y_i <= max(alpha) with yM <= alpha.
inline std::int64_t psi(const simis::IncidenceMatrix& m, const std::vector<std::int64_t>& alpha) {
  const std::size_t rows = m.rows();
  const std::int64_t top = alpha.empty() ? 0 : *std::max_element(alpha.begin(), alpha.end());
  std::int64_t best = 0;
  std::vector<std::int64_t> y(rows, 0);
  while (true) {
    bool feasible = true;
    for (std::size_t j = 0; j < m.cols() && feasible; ++j) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < rows; ++i) s += y[i] * m.at(i, j);
      feasible = s <= alpha[j];
    }
    if (feasible) best = std::max(best, std::accumulate(y.begin(), y.end(), std::int64_t{0}));
    std::size_t i = 0;
    while (i < rows && y[i] == top) y[i++] = 0;
    if (i == rows) break;
    ++y[i];
  }
  return best;
}

/// Isomorphism by trying all n! relabellings.
inline bool isomorphic(const simis::Graph& a, const simis::Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<int> p(a.num_vertices());
  std::iota(p.begin(), p.end(), 1);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) {
      if (!b.adjacent(p[u - 1], p[v - 1])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Number of isomorphism classes on n vertices: all 2^(n choose 2) labelled
/// graphs, deduplicated by the all-permutation isomorphism test.
inline std::size_t count_classes(std::size_t n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= static_cast<int>(n); ++a) {
    for (int b = a + 1; b <= static_cast<int>(n); ++b) pairs.emplace_back(a, b);
  }
  std::vector<simis::Graph> reps;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pairs.size()); ++pick) {
    std::vector<simis::Graph::Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((pick >> i) & 1U) edges.push_back(pairs[i]);
    }
    simis::Graph g(n, edges);
    bool seen = std::any_of(reps.begin(), reps.end(), [&](const simis::Graph& r) { return isomorphic(r, g); });
    if (!seen) reps.push_back(g);
  }
  return reps.size();
}

}  // namespace oracle
