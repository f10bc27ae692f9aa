#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simis/errors.hpp"
#include "simis/incidence_matrix.hpp"
#include "simis/monomial.hpp"
#include "simis/vertex_set.hpp"

namespace simis {

namespace detail {

/// Inclusion-minimal members of `sets`, deduplicated and sorted by mask.
inline std::vector<VertexMask> minimal_sets(std::vector<VertexMask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::stable_sort(sets.begin(), sets.end(), [](VertexMask a, VertexMask b) { return popcount(a) < popcount(b); });
  std::vector<VertexMask> kept;
  for (VertexMask s : sets) {
    bool has_subset = std::any_of(kept.begin(), kept.end(), [s](VertexMask k) { return (k & s) == k; });
    if (!has_subset) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

inline int matching_number(std::span<const VertexMask> edges) {
  int best = 0;
  auto search = [&](auto&& self, std::size_t i, VertexMask used, int taken) -> void {
    if (taken + static_cast<int>(edges.size() - i) <= best) return;
    if (i == edges.size()) {
      best = taken;
      return;
    }
    if ((edges[i] & used) == 0) self(self, i + 1, used | edges[i], taken + 1);
    self(self, i + 1, used, taken);
  };
  search(search, 0, 0, 0);
  return best;
}

/// Every inclusion-minimal vertex set meeting all `edges`, sorted by mask.
inline std::vector<VertexMask> minimal_covers(std::span<const VertexMask> edges) {
  VertexMask universe = 0;
  for (VertexMask e : edges) universe |= e;
  std::vector<VertexMask> candidates;
  for (VertexMask s = universe;; s = (s - 1) & universe) {
    candidates.push_back(s);
    if (s == 0) break;
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](VertexMask a, VertexMask b) { return popcount(a) < popcount(b); });
  std::vector<VertexMask> covers;
  for (VertexMask s : candidates) {
    if (!std::all_of(edges.begin(), edges.end(), [s](VertexMask e) { return (e & s) != 0; })) continue;
    if (std::any_of(covers.begin(), covers.end(), [s](VertexMask c) { return (c & s) == c; })) continue;
    covers.push_back(s);
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

inline int cover_number(std::span<const VertexMask> edges) {
  if (edges.empty()) return 0;
  VertexMask universe = 0;
  for (VertexMask e : edges) universe |= e;
  int best = popcount(universe);
  for (VertexMask s = universe;; s = (s - 1) & universe) {
    if (popcount(s) < best &&
        std::all_of(edges.begin(), edges.end(), [s](VertexMask e) { return (e & s) != 0; })) {
      best = popcount(s);
    }
    if (s == 0) break;
  }
  return best;
}

/// Edges of the minor H\D/C in the original labelling, or nullopt when a
/// contraction empties an edge (the unit-ideal minor).
inline std::optional<std::vector<VertexMask>> minor_edges(std::span<const VertexMask> edges, VertexMask deleted,
                                                          VertexMask contracted) {
  std::vector<VertexMask> out;
  for (VertexMask e : edges) {
    if (e & deleted) continue;
    VertexMask r = e & ~contracted;
    if (r == 0) return std::nullopt;
    out.push_back(r);
  }
  return minimal_sets(std::move(out));
}

}  // namespace detail

/// A clutter: n vertices and an antichain of nonempty edges. Edges are kept
/// sorted by bitmask, which fixes the row order of the incidence matrix.
class Clutter {
 public:
  Clutter() = default;

  /// Normalizes `edges` to their inclusion-minimal members.
  Clutter(std::size_t n, std::vector<VertexMask> edges) : n_(n) {
    if (n > kMaxVertices) throw ResourceError("clutters are limited to 64 vertices");
    for (VertexMask e : edges) {
      if (e == 0) throw ArgumentError("empty edge is not allowed in a clutter");
      if ((e & ~full_mask(n)) != 0) throw ArgumentError("edge uses a vertex out of range");
    }
    edges_ = detail::minimal_sets(std::move(edges));
  }

  static Clutter from_labels(std::size_t n, const std::vector<std::vector<int>>& edges) {
    if (n > kMaxVertices) throw ResourceError("clutters are limited to 64 vertices");
    std::vector<VertexMask> masks;
    for (const auto& e : edges) masks.push_back(mask_of(std::span<const int>(e), n));
    return Clutter(n, std::move(masks));
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<VertexMask>& edges() const { return edges_; }
  bool has_edges() const { return !edges_.empty(); }

  /// The common edge size if all edges have it; nullopt for mixed sizes or no edges.
  std::optional<int> uniformity() const {
    if (edges_.empty()) return std::nullopt;
    int d = popcount(edges_.front());
    for (VertexMask e : edges_) {
      if (popcount(e) != d) return std::nullopt;
    }
    return d;
  }

  std::vector<std::vector<int>> edge_labels() const {
    std::vector<std::vector<int>> out;
    for (VertexMask e : edges_) out.push_back(labels_of(e));
    return out;
  }

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<VertexMask> edges_;
};

inline MonomialIdeal edge_ideal(const Clutter& h) {
  std::vector<Monomial> gens;
  for (VertexMask e : h.edges()) gens.push_back(Monomial::squarefree(h.num_vertices(), e));
  return minimalize(std::move(gens), h.num_vertices());
}

inline int matching_number(const Clutter& h) { return detail::matching_number(h.edges()); }

/// Minimum vertex cover size (the height of the edge ideal); 0 without edges.
inline int cover_number(const Clutter& h) { return detail::cover_number(h.edges()); }

inline std::vector<PrimeSupport> min_vertex_covers(const Clutter& h) {
  if (!h.has_edges()) throw ArgumentError("min_vertex_covers: clutter has no edges");
  std::vector<PrimeSupport> out;
  for (VertexMask c : detail::minimal_covers(h.edges())) out.emplace_back(c, h.num_vertices());
  return out;
}

namespace detail {
inline void check_vertex(const Clutter& h, std::size_t v) {
  if (v < 1 || v > h.num_vertices()) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(h.num_vertices()));
  }
}
}  // namespace detail

/// H \ v: drops v and every edge through it. Higher labels shift down by one.
inline Clutter deletion(const Clutter& h, std::size_t v) {
  detail::check_vertex(h, v);
  const VertexMask bit = vertex_bit(v);
  std::vector<VertexMask> edges;
  for (VertexMask e : h.edges()) {
    if (!(e & bit)) edges.push_back(compact(e, bit));
  }
  return Clutter(h.num_vertices() - 1, std::move(edges));
}

/// H / v: removes v from every edge and keeps the minimal results. Returns
/// nullopt when an edge becomes empty. Higher labels shift down by one.
inline std::optional<Clutter> contraction(const Clutter& h, std::size_t v) {
  detail::check_vertex(h, v);
  const VertexMask bit = vertex_bit(v);
  std::vector<VertexMask> edges;
  for (VertexMask e : h.edges()) {
    VertexMask r = compact(e & ~bit, bit);
    if (r == 0) return std::nullopt;
    edges.push_back(r);
  }
  return Clutter(h.num_vertices() - 1, std::move(edges));
}

/// A minor H \ D / C. `clutter` is compacted onto the surviving vertices;
/// `labels[i]` is the original label of compacted vertex i+1. An empty
/// `clutter` marks the trivial (unit-ideal) minor.
struct Minor {
  std::optional<Clutter> clutter;
  std::vector<int> labels;

  bool trivial() const { return !clutter.has_value(); }
};

inline Minor minor(const Clutter& h, VertexMask deleted, VertexMask contracted) {
  const std::size_t n = h.num_vertices();
  if (deleted & contracted) throw ArgumentError("minor: deleted and contracted sets overlap");
  if (((deleted | contracted) & ~full_mask(n)) != 0) throw ArgumentError("minor: vertex out of range");
  const VertexMask removed = deleted | contracted;
  Minor out;
  out.labels = labels_of(full_mask(n) & ~removed);
  auto edges = detail::minor_edges(h.edges(), deleted, contracted);
  if (!edges) return out;
  for (auto& e : *edges) e = compact(e, removed);
  out.clutter = Clutter(n - static_cast<std::size_t>(popcount(removed)), std::move(*edges));
  return out;
}

inline bool has_koenig(const Clutter& h) { return cover_number(h) == matching_number(h); }

/// Trivial minors count as König.
inline bool has_koenig(const Minor& m) { return m.trivial() || has_koenig(*m.clutter); }

struct FailingMinor {
  VertexMask deleted = 0;
  VertexMask contracted = 0;
  int cover_number = 0;
  int matching_number = 0;
};

struct PackingReport {
  bool packs = true;
  std::optional<FailingMinor> failing_minor;
};

inline constexpr std::size_t kDefaultPackingMaxVertices = 12;

/// Scans all 3^n minors H \ D / C. Pairs are visited with D ascending by
/// mask, then C ascending by mask among subsets of the remaining vertices;
/// the first non-König minor is reported in original labels.
inline PackingReport has_packing(const Clutter& h, std::size_t max_vertices = kDefaultPackingMaxVertices) {
  const std::size_t n = h.num_vertices();
  if (n > max_vertices) {
    throw ResourceError("has_packing: " + std::to_string(n) + " vertices exceeds the cap of " +
                        std::to_string(max_vertices));
  }
  const VertexMask all = full_mask(n);
  for (VertexMask d = 0;; ++d) {
    const VertexMask rest = all & ~d;
    for (VertexMask c = 0;;) {
      if (auto edges = detail::minor_edges(h.edges(), d, c)) {
        int cover = detail::cover_number(*edges);
        int matching = detail::matching_number(*edges);
        if (cover != matching) return {false, FailingMinor{d, c, cover, matching}};
      }
      if (c == rest) break;
      c = ((c | ~rest) + 1) & rest;
    }
    if (d == all) break;
  }
  return {};
}

/// H_{y1..yr}: appends r vertices and adds all of them to every edge.
inline Clutter extend(const Clutter& h, std::size_t r) {
  const std::size_t n = h.num_vertices();
  if (n + r > kMaxVertices) throw ResourceError("extend: clutters are limited to 64 vertices");
  const VertexMask added = full_mask(n + r) & ~full_mask(n);
  std::vector<VertexMask> edges;
  for (VertexMask e : h.edges()) edges.push_back(e | added);
  return Clutter(n + r, std::move(edges));
}

inline IncidenceMatrix incidence_matrix(const Clutter& h) { return IncidenceMatrix(h.num_vertices(), h.edges()); }

}  // namespace simis
