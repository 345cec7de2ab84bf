#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "schubvan/permutation.hpp"

namespace schubvan {

struct Cell {
  int row;
  int col;
  auto operator<=>(const Cell&) const = default;
};

// Bit r-1 set <=> row r is in the set.
using RowSet = std::uint64_t;

inline bool inRowSet(RowSet s, int row) { return (s >> (row - 1)) & 1u; }

// Finite set of cells in a rows x cols grid, with per-column sorted row lists.
class Diagram {
 public:
  static constexpr int kMaxRows = 64;

  Diagram() = default;
  Diagram(int rows, int cols, std::vector<Cell> cells);

  // Rothe diagram {(i,j) : j < w(i), i < w^-1(j)}.
  static Diagram rothe(const Permutation& w);
  // Left-to-right concatenation; all parts must share the row bound.
  static Diagram concat(std::span<const Diagram> parts);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }

  bool contains(int row, int col) const;
  const std::vector<Cell>& cells() const { return cells_; }
  // Rows holding a cell in column c, increasing.
  const std::vector<int>& columnRows(int c) const { return columns_[c - 1]; }
  RowSet columnMask(int c) const { return masks_[c - 1]; }
  std::vector<int> rowCounts() const;

  // Same diagram with all-empty columns removed.
  Diagram compressed() const;

  bool operator==(const Diagram& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && cells_ == o.cells_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cell> cells_;  // sorted by (row, col)
  std::vector<std::vector<int>> columns_;
  std::vector<RowSet> masks_;
};

// Concatenated Rothe diagram D(w1,...,wk); the words are embedded into S_N first.
Diagram concatRothe(std::span<const Permutation> ws);

}  // namespace schubvan
