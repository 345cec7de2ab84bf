#include "schubvan/schubitope.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace schubvan {

ColumnWord columnWord(const Diagram& d, int c, RowSet s) {
  ColumnWord w;
  for (int r = 1; r <= d.rows(); ++r) {
    const bool inD = d.contains(r, c), inS = inRowSet(s, r);
    if (!inD && inS) w.push_back(Bracket::Open);
    else if (inD && !inS) w.push_back(Bracket::Close);
    else if (inD && inS) w.push_back(Bracket::Star);
  }
  return w;
}

int thetaColumn(const ColumnWord& word) {
  int pending = 0, pairs = 0, stars = 0;
  for (Bracket b : word) {
    switch (b) {
      case Bracket::Open:
        ++pending;
        break;
      case Bracket::Close:
        if (pending > 0) {
          --pending;
          ++pairs;
        }
        break;
      case Bracket::Star:
        ++stars;
        break;
    }
  }
  return pairs + stars;
}

int thetaColumnMask(RowSet column, RowSet s, int rows) {
  int pending = 0, value = 0;
  for (int r = 0; r < rows; ++r) {
    const bool inD = (column >> r) & 1u, inS = (s >> r) & 1u;
    if (inS) {
      if (inD) ++value;
      else ++pending;
    } else if (inD && pending > 0) {
      --pending;
      ++value;
    }
  }
  return value;
}

int theta(const Diagram& d, RowSet s) {
  int total = 0;
  for (int c = 1; c <= d.cols(); ++c)
    if (d.columnMask(c) != 0) total += thetaColumnMask(d.columnMask(c), s, d.rows());
  return total;
}

std::vector<int> rowSetToList(RowSet s) {
  std::vector<int> out;
  for (int r = 1; r <= 64; ++r)
    if (inRowSet(s, r)) out.push_back(r);
  return out;
}

RowSet rowSetFromList(const std::vector<int>& rows) {
  RowSet s = 0;
  for (int r : rows) {
    if (r < 1 || r > 64) throw std::out_of_range("row outside 1..64");
    s |= RowSet{1} << (r - 1);
  }
  return s;
}

namespace {

// Visits k-subsets of {1..n} in lexicographic order; stops when fn returns false.
bool forEachCombination(int n, int k, const std::function<bool(RowSet)>& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  for (;;) {
    RowSet s = 0;
    for (int r : idx) s |= RowSet{1} << (r - 1);
    if (!fn(s)) return false;
    int p = k - 1;
    while (p >= 0 && idx[p] == n - k + p + 1) --p;
    if (p < 0) return true;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

void checkContent(const Diagram& d, const ExponentVector& alpha) {
  if (static_cast<int>(alpha.size()) != d.rows())
    throw std::invalid_argument("content length differs from the number of rows");
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("negative content entry");
}

long sumOver(const ExponentVector& alpha, RowSet s) {
  long total = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if ((s >> i) & 1u) total += alpha[i];
  return total;
}

}  // namespace

std::vector<RowSet> subsetScanOrder(int rows) {
  std::vector<RowSet> out;
  for (int k = 1; k < rows; ++k)
    forEachCombination(rows, k, [&](RowSet s) {
      out.push_back(s);
      return true;
    });
  return out;
}

std::uint64_t subsetScanKey(RowSet s, int rows) {
  RowSet reversed = 0;
  for (int r = 0; r < rows; ++r)
    if ((s >> r) & 1u) reversed |= RowSet{1} << (rows - 1 - r);
  const RowSet mask = allRows(rows);
  return (static_cast<std::uint64_t>(std::popcount(s)) << rows) | (~reversed & mask);
}

Membership schubitopeMembership(const Diagram& d, const ExponentVector& alpha) {
  checkContent(d, alpha);
  if (d.rows() > kMaxSubsetScanRows)
    throw std::domain_error("too many rows for the subset scan; use lpFeasible");
  Membership m;
  m.degreeMismatch = sumOver(alpha, allRows(d.rows())) != d.size();
  for (int k = 1; k < d.rows() && !m.violated; ++k)
    forEachCombination(d.rows(), k, [&](RowSet s) {
      const long lhs = sumOver(alpha, s);
      if (lhs == 0) return true;
      const long rhs = theta(d, s);
      if (lhs > rhs) {
        m.violated = InfeasibleSubset{s, lhs, rhs};
        return false;
      }
      return true;
    });
  m.member = !m.degreeMismatch && !m.violated;
  return m;
}

// ---------------------------------------------------------------------------
// Tableaux

int Filling::label(int row, int col) const {
  auto it = std::lower_bound(diagram.cells().begin(), diagram.cells().end(), Cell{row, col});
  if (it == diagram.cells().end() || *it != Cell{row, col})
    throw std::out_of_range("no such cell in filling");
  return labels[it - diagram.cells().begin()];
}

bool Filling::columnStrict() const {
  for (int c = 1; c <= diagram.cols(); ++c) {
    const auto& rows = diagram.columnRows(c);
    for (std::size_t t = 1; t < rows.size(); ++t)
      if (label(rows[t - 1], c) >= label(rows[t], c)) return false;
  }
  return true;
}

bool Filling::rowBounded() const {
  const auto& cells = diagram.cells();
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (labels[k] < 1 || labels[k] > cells[k].row) return false;
  return true;
}

ExponentVector Filling::content() const {
  ExponentVector c(diagram.rows(), 0);
  for (int l : labels)
    if (l >= 1 && l <= diagram.rows()) ++c[l - 1];
  return c;
}

bool isTableau(const Filling& f, const ExponentVector& alpha) {
  return f.labels.size() == f.diagram.cells().size() && f.rowBounded() && f.columnStrict() &&
         f.content() == alpha;
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
    return h;
  }
};

class TabSearch {
 public:
  TabSearch(const Diagram& d, const ExponentVector& alpha, std::size_t limit)
      : d_(d), remaining_(alpha), limit_(limit), labels_(d.size(), 0) {
    for (int c = 1; c <= d.cols(); ++c)
      if (!d.columnRows(c).empty()) columns_.push_back(c);
    // Cell indices of each column, top to bottom.
    cellIndex_.resize(columns_.size());
    for (std::size_t k = 0; k < d.cells().size(); ++k) {
      const Cell& cell = d.cells()[k];
      auto pos = std::lower_bound(columns_.begin(), columns_.end(), cell.col) - columns_.begin();
      cellIndex_[pos].push_back(static_cast<int>(k));
    }
    for (auto& idx : cellIndex_)
      std::sort(idx.begin(), idx.end(),
                [&](int a, int b) { return d.cells()[a].row < d.cells()[b].row; });
    // capacity_[k][l-1]: columns k.. that can still take label l (have a cell in row >= l).
    const int rows = d.rows();
    capacity_.assign(columns_.size() + 1, std::vector<int>(rows, 0));
    for (int k = static_cast<int>(columns_.size()) - 1; k >= 0; --k) {
      const int bottom = d.columnRows(columns_[k]).back();
      for (int l = 1; l <= rows; ++l)
        capacity_[k][l - 1] = capacity_[k + 1][l - 1] + (bottom >= l ? 1 : 0);
    }
  }

  std::vector<Filling> run() {
    searchColumn(0);
    return std::move(found_);
  }

 private:
  bool full() const { return found_.size() >= limit_; }

  // Returns true if some completion exists from this state.
  bool searchColumn(std::size_t k) {
    if (k == columns_.size()) {
      for (int r : remaining_)
        if (r != 0) return false;
      found_.push_back(Filling{d_, labels_});
      return true;
    }
    for (std::size_t l = 0; l < remaining_.size(); ++l)
      if (remaining_[l] > capacity_[k][l]) return false;
    std::vector<int> key = remaining_;
    key.push_back(static_cast<int>(k));
    if (dead_.count(key)) return false;
    const bool any = searchCell(k, 0, 0);
    if (!any) dead_.insert(std::move(key));
    return any;
  }

  bool searchCell(std::size_t k, std::size_t t, int prevLabel) {
    const auto& idx = cellIndex_[k];
    if (t == idx.size()) return searchColumn(k + 1);
    const int row = d_.cells()[idx[t]].row;
    // Leave room for the cells below: the t-th of z cells needs label <= row.
    bool any = false;
    for (int l = prevLabel + 1; l <= row; ++l) {
      if (remaining_[l - 1] == 0) continue;
      --remaining_[l - 1];
      labels_[idx[t]] = l;
      any = searchCell(k, t + 1, l) || any;
      ++remaining_[l - 1];
      if (full()) break;
    }
    return any;
  }

  const Diagram& d_;
  std::vector<int> remaining_;
  std::size_t limit_;
  std::vector<int> labels_;
  std::vector<int> columns_;
  std::vector<std::vector<int>> cellIndex_;
  std::vector<std::vector<int>> capacity_;
  std::unordered_set<std::vector<int>, VectorHash> dead_;
  std::vector<Filling> found_;
};

}  // namespace

std::vector<Filling> enumerateTab(const Diagram& d, const ExponentVector& alpha,
                                  std::size_t limit) {
  checkContent(d, alpha);
  if (limit == 0) return {};
  if (sumOver(alpha, allRows(d.rows())) != d.size()) return {};
  return TabSearch(d, alpha, limit).run();
}

std::optional<Filling> findTableau(const Diagram& d, const ExponentVector& alpha) {
  auto all = enumerateTab(d, alpha, 1);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

// ---------------------------------------------------------------------------
// Relaxation polytope

bool RelaxationPoint::integral() const {
  for (const auto& v : entries)
    if (v.get_den() != 1) return false;
  return true;
}

RelaxationPoint fillingToRelaxationPoint(const Filling& f) {
  RelaxationPoint p{f.diagram.rows(), f.diagram.cols(), {}};
  p.entries.assign(static_cast<std::size_t>(p.rows) * p.cols, 0);
  const auto& cells = f.diagram.cells();
  for (std::size_t k = 0; k < cells.size(); ++k) p.at(f.labels[k], cells[k].col) = 1;
  return p;
}

bool satisfiesRelaxation(const Diagram& d, const ExponentVector& alpha, const RelaxationPoint& p) {
  if (p.rows != d.rows() || p.cols != d.cols() || static_cast<int>(alpha.size()) != d.rows())
    return false;
  for (const auto& v : p.entries)
    if (sgn(v) < 0 || v > 1) return false;
  for (int i = 1; i <= p.rows; ++i) {
    mpq_class row = 0;
    for (int j = 1; j <= p.cols; ++j) row += p.at(i, j);
    if (row != alpha[i - 1]) return false;
  }
  for (int j = 1; j <= p.cols; ++j) {
    mpq_class prefix = 0;
    int cells = 0;
    for (int s = 1; s <= p.rows; ++s) {
      prefix += p.at(s, j);
      if (d.contains(s, j)) ++cells;
      if (prefix < cells) return false;
    }
  }
  return true;
}

lp::Problem buildRelaxation(const Diagram& d, const ExponentVector& alpha) {
  const int n = d.rows(), m = d.cols();
  auto var = [m](int i, int j) { return (i - 1) * m + (j - 1); };
  lp::Problem prob;
  prob.numVars = n * m;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) prob.add({{var(i, j), 1}}, lp::Sense::LessEqual, 1);
  for (int i = 1; i <= n; ++i) {
    std::vector<std::pair<int, mpq_class>> terms;
    for (int j = 1; j <= m; ++j) terms.emplace_back(var(i, j), 1);
    prob.add(std::move(terms), lp::Sense::Equal, alpha[i - 1]);
  }
  for (int j = 1; j <= m; ++j) {
    const auto& rows = d.columnRows(j);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      std::vector<std::pair<int, mpq_class>> terms;
      for (int i = 1; i <= rows[t]; ++i) terms.emplace_back(var(i, j), 1);
      prob.add(std::move(terms), lp::Sense::GreaterEqual, static_cast<long>(t + 1));
    }
  }
  return prob;
}

FeasibilityCertificate lpFeasible(const Diagram& d, const ExponentVector& alpha, lp::Stats* stats) {
  checkContent(d, alpha);
  if (sumOver(alpha, allRows(d.rows())) != d.size())
    throw std::invalid_argument("degree mismatch: sum(alpha) != |D|");
  const int n = d.rows(), m = d.cols();
  lp::Problem prob = buildRelaxation(d, alpha);
  lp::Result res = lp::solve(prob, stats);

  if (auto* f = std::get_if<lp::Feasible>(&res)) {
    RelaxationPoint p{n, m, std::move(f->x)};
    return p;
  }
  const auto& mult = std::get<lp::Infeasible>(res).multipliers;
  FarkasCertificate cert{n, m, {}, {}, {}};
  cert.upper.assign(static_cast<std::size_t>(n) * m, 0);
  cert.content.assign(n, 0);
  cert.rowBound.assign(static_cast<std::size_t>(n) * m, 0);
  std::size_t k = 0;
  for (int idx = 0; idx < n * m; ++idx) cert.upper[idx] = mult[k++];
  for (int i = 0; i < n; ++i) cert.content[i] = mult[k++];
  for (int j = 1; j <= m; ++j)
    for (int s : d.columnRows(j)) cert.rowBound[(s - 1) * m + (j - 1)] = mult[k++];
  return cert;
}

// ---------------------------------------------------------------------------
// Facets

namespace {

int affineRank(const std::vector<const ExponentVector*>& pts) {
  if (pts.size() <= 1) return 0;
  const std::size_t dim = pts[0]->size();
  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    std::vector<mpq_class> r(dim);
    for (std::size_t c = 0; c < dim; ++c) r[c] = (*pts[k])[c] - (*pts[0])[c];
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (std::size_t c = 0; c < dim && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || sgn(rows[r][c]) == 0) continue;
      mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t q = c; q < dim; ++q) rows[r][q] -= f * rows[rank][q];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<FacetInequality> facetInequalities(const Diagram& d,
                                               const std::vector<ExponentVector>& points) {
  std::vector<FacetInequality> out;
  if (points.empty()) return out;
  std::vector<int> active;
  for (int r = 1; r <= d.rows(); ++r)
    for (const auto& p : points)
      if (p[r - 1] != 0) {
        active.push_back(r);
        break;
      }
  std::vector<const ExponentVector*> all;
  for (const auto& p : points) all.push_back(&p);
  const int dim = affineRank(all);
  if (dim == 0) return out;

  std::set<std::vector<std::size_t>> seen;
  const int a = static_cast<int>(active.size());
  for (int k = 1; k < a; ++k)
    forEachCombination(a, k, [&](RowSet local) {
      RowSet s = 0;
      for (int t = 0; t < a; ++t)
        if ((local >> t) & 1u) s |= RowSet{1} << (active[t] - 1);
      const long bound = theta(d, s);
      std::vector<std::size_t> tightIdx;
      std::vector<const ExponentVector*> tight;
      for (std::size_t q = 0; q < points.size(); ++q)
        if (sumOver(points[q], s) == bound) {
          tightIdx.push_back(q);
          tight.push_back(&points[q]);
        }
      if (!tight.empty() && affineRank(tight) == dim - 1 && seen.insert(tightIdx).second)
        out.push_back({s, static_cast<int>(bound)});
      return true;
    });
  return out;
}

}  // namespace schubvan
