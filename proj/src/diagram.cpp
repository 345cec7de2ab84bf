#include "schubvan/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubvan {

Diagram::Diagram(int rows, int cols, std::vector<Cell> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative diagram bounds");
  if (rows > kMaxRows) throw std::invalid_argument("diagram has too many rows");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  columns_.assign(cols_, {});
  masks_.assign(cols_, 0);
  for (const auto& c : cells_) {
    if (c.row < 1 || c.row > rows_ || c.col < 1 || c.col > cols_)
      throw std::invalid_argument("cell outside diagram bounds");
    columns_[c.col - 1].push_back(c.row);
    masks_[c.col - 1] |= RowSet{1} << (c.row - 1);
  }
}

Diagram Diagram::rothe(const Permutation& w) {
  const int n = w.size();
  Permutation inv = w.inverse();
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (j < w(i) && i < inv(j)) cells.push_back({i, j});
  return Diagram(n, n, std::move(cells));
}

Diagram Diagram::concat(std::span<const Diagram> parts) {
  if (parts.empty()) return Diagram();
  const int rows = parts.front().rows();
  int offset = 0;
  std::vector<Cell> cells;
  for (const auto& d : parts) {
    if (d.rows() != rows) throw std::invalid_argument("diagrams have different row bounds");
    for (const auto& c : d.cells()) cells.push_back({c.row, c.col + offset});
    offset += d.cols();
  }
  return Diagram(rows, offset, std::move(cells));
}

bool Diagram::contains(int row, int col) const {
  if (col < 1 || col > cols_ || row < 1 || row > rows_) return false;
  return inRowSet(masks_[col - 1], row);
}

std::vector<int> Diagram::rowCounts() const {
  std::vector<int> counts(rows_, 0);
  for (const auto& c : cells_) ++counts[c.row - 1];
  return counts;
}

Diagram Diagram::compressed() const {
  std::vector<int> newIndex(cols_ + 1, 0);
  int next = 0;
  for (int c = 1; c <= cols_; ++c)
    if (!columns_[c - 1].empty()) newIndex[c] = ++next;
  std::vector<Cell> cells;
  cells.reserve(cells_.size());
  for (const auto& c : cells_) cells.push_back({c.row, newIndex[c.col]});
  return Diagram(rows_, next, std::move(cells));
}

Diagram concatRothe(std::span<const Permutation> ws) {
  const int n = maxSize(ws);
  std::vector<Diagram> parts;
  parts.reserve(ws.size());
  for (const auto& w : ws) parts.push_back(Diagram::rothe(w.embed(n)));
  return Diagram::concat(parts);
}

}  // namespace schubvan
