#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "simis/errors.hpp"

namespace simis {

// Vertex (and variable) sets are bitmasks: label i (1-based) is bit i-1.
using VertexMask = std::uint64_t;
inline constexpr std::size_t kMaxVertices = 64;

inline int popcount(VertexMask m) { return std::popcount(m); }

inline VertexMask full_mask(std::size_t n) {
  return n >= kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline VertexMask vertex_bit(std::size_t label) { return VertexMask{1} << (label - 1); }

/// 1-based labels of the members of `m`, ascending.
inline std::vector<int> labels_of(VertexMask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

/// Builds a mask from 1-based labels, all of which must lie in [1, n].
inline VertexMask mask_of(std::span<const int> labels, std::size_t n) {
  VertexMask m = 0;
  for (int v : labels) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw ArgumentError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    }
    m |= vertex_bit(static_cast<std::size_t>(v));
  }
  return m;
}

inline VertexMask mask_of(std::initializer_list<int> labels, std::size_t n) {
  return mask_of(std::span<const int>(labels.begin(), labels.size()), n);
}

/// Removes the bits in `removed` from `m`, shifting higher bits down so the
/// surviving positions stay contiguous.
inline VertexMask compact(VertexMask m, VertexMask removed) {
  VertexMask out = 0;
  int pos = 0;
  for (std::size_t i = 0; i < kMaxVertices; ++i) {
    VertexMask bit = VertexMask{1} << i;
    if (removed & bit) continue;
    if (m & bit) out |= VertexMask{1} << pos;
    ++pos;
  }
  return out;
}

}  // namespace simis
