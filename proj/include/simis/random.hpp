#pragma once

#include <random>
#include <vector>

#include "simis/clutter.hpp"
#include "simis/monomial.hpp"
#include "simis/vertex_set.hpp"

namespace simis {

/// A clutter on n vertices built from up to `max_edges` random nonempty
/// subsets (antichain-normalized, so it may end up with fewer edges).
template <class Rng>
Clutter random_clutter(Rng& rng, std::size_t n, std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> count(0, max_edges);
  std::uniform_int_distribution<VertexMask> subset(1, full_mask(n));
  std::vector<VertexMask> edges(count(rng));
  for (auto& e : edges) e = subset(rng);
  return Clutter(n, std::move(edges));
}

/// A squarefree ideal with between 1 and `max_gens` generators, none equal to 1.
template <class Rng>
MonomialIdeal random_squarefree_ideal(Rng& rng, std::size_t n, std::size_t max_gens) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<VertexMask> subset(1, full_mask(n));
  std::vector<Monomial> gens(count(rng));
  for (auto& g : gens) g = Monomial::squarefree(n, subset(rng));
  return minimalize(std::move(gens), n);
}

}  // namespace simis
