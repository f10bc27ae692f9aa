#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simis/errors.hpp"
#include "simis/vertex_set.hpp"

namespace simis {

/// A 0/1 matrix with at most 64 columns, one bitmask per row
/// (column j is bit j).
class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  IncidenceMatrix(std::size_t cols, std::vector<VertexMask> rows) : cols_(cols), rows_(std::move(rows)) {
    if (cols > kMaxVertices) throw ResourceError("incidence matrix limited to 64 columns");
    for (VertexMask r : rows_) {
      if ((r & ~full_mask(cols)) != 0) throw ArgumentError("row has entries beyond the column count");
    }
  }

  /// From dense 0/1 entries; every row must have `cols` entries.
  static IncidenceMatrix from_dense(std::size_t cols, const std::vector<std::vector<int>>& data) {
    std::vector<VertexMask> rows;
    for (const auto& row : data) {
      if (row.size() != cols) throw DimensionError("matrix row length differs from column count");
      VertexMask m = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        if (row[j] != 0 && row[j] != 1) throw ArgumentError("matrix entries must be 0 or 1");
        if (row[j]) m |= VertexMask{1} << j;
      }
      rows.push_back(m);
    }
    return IncidenceMatrix(cols, std::move(rows));
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  int at(std::size_t i, std::size_t j) const { return static_cast<int>((rows_[i] >> j) & 1U); }
  VertexMask row_mask(std::size_t i) const { return rows_[i]; }
  const std::vector<VertexMask>& row_masks() const { return rows_; }
  int row_sum(std::size_t i) const { return popcount(rows_[i]); }

  std::vector<std::vector<int>> dense() const {
    std::vector<std::vector<int>> out(rows_.size(), std::vector<int>(cols_, 0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j);
    }
    return out;
  }

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<VertexMask> rows_;
};

}  // namespace simis
