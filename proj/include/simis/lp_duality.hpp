#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "simis/errors.hpp"
#include "simis/graph.hpp"
#include "simis/incidence_matrix.hpp"
#include "simis/vertex_set.hpp"

namespace simis {

using Weight = std::int64_t;
using WeightVector = std::vector<Weight>;

/// The covering program min{alpha.x : Mx >= 1, x integral >= 0} and its
/// packing dual max{y.1 : yM <= alpha, y integral >= 0}.
struct LpReport {
  Weight phi = 0;
  Weight psi = 0;
  std::vector<int> x_opt;    // 0/1 cover, one entry per column
  std::vector<Weight> y_opt;  // packing, one entry per row
  Weight gap() const { return phi - psi; }
};

/// A = (A | B) with B the m x r all-ones block; r = 0 returns A.
inline IncidenceMatrix extend_matrix(const IncidenceMatrix& a, std::size_t r) {
  const std::size_t cols = a.cols() + r;
  if (cols > kMaxVertices) throw ResourceError("extend_matrix: limited to 64 columns");
  const VertexMask added = full_mask(cols) & ~full_mask(a.cols());
  std::vector<VertexMask> rows;
  for (VertexMask row : a.row_masks()) rows.push_back(row | added);
  return IncidenceMatrix(cols, std::move(rows));
}

namespace detail {

inline void check_lp_instance(const IncidenceMatrix& m, const WeightVector& alpha) {
  if (alpha.size() != m.cols()) throw DimensionError("alpha length differs from column count");
  for (Weight a : alpha) {
    if (a < 0) throw ArgumentError("alpha entries must be nonnegative");
  }
  for (VertexMask row : m.row_masks()) {
    if (row == 0) throw ArgumentError("matrix has a zero row; the covering program is infeasible");
  }
}

}  // namespace detail

inline constexpr std::size_t kMaxLpColumns = 24;

/// Optimal covering value. Raising any x_j past 1 only adds cost, so the
/// search runs over 0/1 vectors; the first optimum by mask is returned.
inline std::pair<Weight, std::vector<int>> phi(const IncidenceMatrix& m, const WeightVector& alpha) {
  detail::check_lp_instance(m, alpha);
  const std::size_t n = m.cols();
  if (n > kMaxLpColumns) throw ResourceError("phi: limited to " + std::to_string(kMaxLpColumns) + " columns");
  Weight best = std::numeric_limits<Weight>::max();
  VertexMask best_x = 0;
  for (VertexMask x = 0; x <= full_mask(n); ++x) {
    bool covers = std::all_of(m.row_masks().begin(), m.row_masks().end(), [x](VertexMask r) { return (r & x) != 0; });
    if (!covers) continue;
    Weight cost = 0;
    for (int j : labels_of(x)) cost += alpha[static_cast<std::size_t>(j - 1)];
    if (cost < best) {
      best = cost;
      best_x = x;
    }
  }
  std::vector<int> xs(n, 0);
  for (int j : labels_of(best_x)) xs[static_cast<std::size_t>(j - 1)] = 1;
  return {best, xs};
}

/// Optimal packing value by depth-first search over y, row by row, with
/// each y_i bounded by the residual capacity of its columns.
inline std::pair<Weight, std::vector<Weight>> psi(const IncidenceMatrix& m, const WeightVector& alpha) {
  detail::check_lp_instance(m, alpha);
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  std::vector<Weight> residual(alpha);
  std::vector<Weight> y(rows, 0);
  std::vector<Weight> best_y(rows, 0);
  Weight best = -1;

  auto cap_of = [&](std::size_t i) {
    Weight c = std::numeric_limits<Weight>::max();
    for (int j : labels_of(m.row_mask(i))) c = std::min(c, residual[static_cast<std::size_t>(j - 1)]);
    return c;
  };
  // Each unit of y_i consumes at least min-row-size units of total capacity.
  int min_row = static_cast<int>(n);
  for (std::size_t i = 0; i < rows; ++i) min_row = std::min(min_row, m.row_sum(i));

  auto search = [&](auto&& self, std::size_t i, Weight value) -> void {
    if (i == rows) {
      if (value > best) {
        best = value;
        best_y = y;
      }
      return;
    }
    Weight by_rows = 0;
    for (std::size_t k = i; k < rows; ++k) by_rows += cap_of(k);
    Weight total = std::accumulate(residual.begin(), residual.end(), Weight{0});
    if (value + std::min(by_rows, total / min_row) <= best) return;

    const Weight cap = cap_of(i);
    const auto cols = labels_of(m.row_mask(i));
    for (Weight v = cap; v >= 0; --v) {
      for (int j : cols) residual[static_cast<std::size_t>(j - 1)] -= v;
      y[i] = v;
      self(self, i + 1, value + v);
      for (int j : cols) residual[static_cast<std::size_t>(j - 1)] += v;
    }
    y[i] = 0;
  };
  if (rows == 0) return {0, {}};
  search(search, 0, 0);
  return {best, best_y};
}

inline LpReport solve_lp(const IncidenceMatrix& m, const WeightVector& alpha) {
  auto [phi_value, x] = phi(m, alpha);
  auto [psi_value, y] = psi(m, alpha);
  return LpReport{phi_value, psi_value, std::move(x), std::move(y)};
}

struct GapWitness {
  WeightVector alpha;
  LpReport report;
};

inline constexpr std::uint64_t kDefaultScanBudget = 20'000'000;

/// Scans alpha over {0..bound}^n in lexicographic order (first coordinate
/// most significant) and returns the first alpha with phi > psi. Finding
/// none only says there is no gap inside the box.
inline std::optional<GapWitness> duality_gap_search(const IncidenceMatrix& m, Weight bound,
                                                    std::uint64_t budget = kDefaultScanBudget) {
  if (bound < 1) throw ArgumentError("duality_gap_search: box bound must be at least 1");
  const std::size_t n = m.cols();
  std::uint64_t work = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (work > budget / static_cast<std::uint64_t>(bound + 1)) {
      throw ResourceError("duality_gap_search: box of size (" + std::to_string(bound + 1) + ")^" +
                          std::to_string(n) + " exceeds the scan budget");
    }
    work *= static_cast<std::uint64_t>(bound + 1);
  }
  WeightVector alpha(n, 0);
  while (true) {
    LpReport r = solve_lp(m, alpha);
    if (r.gap() > 0) return GapWitness{alpha, std::move(r)};
    std::size_t j = n;
    while (j > 0 && alpha[j - 1] == bound) alpha[--j] = 0;
    if (j == 0) return std::nullopt;
    ++alpha[j - 1];
  }
}

// ---------------------------------------------------------------------------
// Structural characterization for matrices with row sums n - 2

struct ReferenceMatrix {
  GraphLabel label;
  IncidenceMatrix matrix;
};

/// Incidence matrices of the clutters of K2, K3, P3, 2K2, P4 and C4 (graph
/// edges complemented). K2 is the 0 x 2 matrix of the edgeless clutter.
inline std::vector<ReferenceMatrix> reference_matrices() {
  auto dense = [](std::size_t cols, std::vector<std::vector<int>> rows) {
    return IncidenceMatrix::from_dense(cols, rows);
  };
  return {
      {GraphLabel::K2, IncidenceMatrix(2, {})},
      {GraphLabel::K3, dense(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})},
      {GraphLabel::P3, dense(3, {{0, 0, 1}, {1, 0, 0}})},
      {GraphLabel::TwoK2, dense(4, {{1, 1, 0, 0}, {0, 0, 1, 1}})},
      {GraphLabel::P4, dense(4, {{0, 0, 1, 1}, {1, 0, 0, 1}, {1, 1, 0, 0}})},
      {GraphLabel::C4, dense(4, {{0, 0, 1, 1}, {1, 0, 0, 1}, {1, 1, 0, 0}, {0, 1, 1, 0}})},
  };
}

inline constexpr std::size_t kMaxPermutationColumns = 8;

/// Representative of M under independent row and column permutations: the
/// lexicographically smallest sorted row list over all column orders.
inline std::vector<VertexMask> permutation_canonical_rows(const IncidenceMatrix& m) {
  const std::size_t n = m.cols();
  if (n > kMaxPermutationColumns) throw ResourceError("permutation canonical form limited to 8 columns");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<VertexMask>> best;
  do {
    std::vector<VertexMask> rows;
    for (VertexMask r : m.row_masks()) {
      VertexMask p = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if ((r >> perm[j]) & 1U) p |= VertexMask{1} << j;
      }
      rows.push_back(p);
    }
    std::sort(rows.begin(), rows.end());
    if (!best || rows < *best) best = std::move(rows);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

inline bool permutation_equivalent(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return permutation_canonical_rows(a) == permutation_canonical_rows(b);
}

/// Decides whether M, whose rows each sum to (columns - 2), has zero duality
/// gap for every alpha: true iff M is a row/column permutation of some
/// reference matrix extended by all-ones columns. This is the exact test;
/// duality_gap_search only samples a box.
///
/// K2's clutter literally has one empty edge, so its extensions are a single
/// row (0 0 1 ... 1); those are accepted alongside the 0 x (2 + r) matrices
/// of the edgeless convention.
inline bool structural_mfmc_check(const IncidenceMatrix& m) {
  const std::size_t n = m.cols();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (n < 2 || m.row_sum(i) != static_cast<int>(n) - 2) {
      throw ArgumentError("structural_mfmc_check: every row must sum to columns - 2");
    }
  }
  auto sorted = m.row_masks();
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("structural_mfmc_check: rows must be distinct");
  }
  if (m.rows() == 0) return n >= 2;

  // A reference matrix has no all-ones column, so the all-ones columns of M
  // are exactly the appended block.
  VertexMask all_ones = full_mask(n);
  for (VertexMask r : m.row_masks()) all_ones &= r;
  const std::size_t base_cols = n - static_cast<std::size_t>(popcount(all_ones));
  if (base_cols > 4) return false;
  std::vector<VertexMask> base_rows;
  for (VertexMask r : m.row_masks()) base_rows.push_back(compact(r, all_ones));
  const IncidenceMatrix base(base_cols, std::move(base_rows));

  if (base.rows() == 1 && base.cols() == 2 && base.row_mask(0) == 0) return true;  // K2, empty edge
  for (const auto& ref : reference_matrices()) {
    if (permutation_equivalent(base, ref.matrix)) return true;
  }
  return false;
}

}  // namespace simis
