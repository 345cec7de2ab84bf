#include "schubvan/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace schubvan::kernels {

int defaultThreads() { return omp_get_max_threads(); }

void parallelFor(std::size_t count, Exec exec, const std::function<void(std::size_t)>& body,
                 int threads) {
  if (exec == Exec::Serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex errorMutex;
  const long n = static_cast<long>(count);
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(errorMutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

namespace {

std::vector<RowSet> nonemptyColumns(const Diagram& d) {
  std::vector<RowSet> cols;
  for (int c = 1; c <= d.cols(); ++c)
    if (d.columnMask(c) != 0) cols.push_back(d.columnMask(c));
  return cols;
}

int thetaFromColumns(const std::vector<RowSet>& cols, RowSet s, int rows) {
  int total = 0;
  for (RowSet c : cols) total += thetaColumnMask(c, s, rows);
  return total;
}

void requireScanSize(const Diagram& d) {
  if (d.rows() > kMaxSubsetScanRows)
    throw std::domain_error("too many rows for the subset scan; use lpFeasible");
}

long subsetSum(const ExponentVector& alpha, RowSet s) {
  long total = 0;
  while (s) {
    total += alpha[std::countr_zero(s)];
    s &= s - 1;
  }
  return total;
}

}  // namespace

std::vector<int> thetaTable(const Diagram& d, Exec exec) {
  requireScanSize(d);
  const auto cols = nonemptyColumns(d);
  const int rows = d.rows();
  const long count = 1L << rows;
  std::vector<int> table(count);
  if (exec == Exec::Serial) {
    for (long s = 0; s < count; ++s) table[s] = theta(d, static_cast<RowSet>(s));
    return table;
  }
#pragma omp parallel for schedule(static)
  for (long s = 0; s < count; ++s) table[s] = thetaFromColumns(cols, static_cast<RowSet>(s), rows);
  return table;
}

std::optional<InfeasibleSubset> firstViolation(const Diagram& d, const ExponentVector& alpha,
                                               Exec exec) {
  requireScanSize(d);
  if (static_cast<int>(alpha.size()) != d.rows())
    throw std::invalid_argument("content length differs from the number of rows");
  const int rows = d.rows();
  if (exec == Exec::Serial) {
    for (RowSet s : subsetScanOrder(rows)) {
      const long lhs = subsetSum(alpha, s);
      if (lhs == 0) continue;
      const long rhs = theta(d, s);
      if (lhs > rhs) return InfeasibleSubset{s, lhs, rhs};
    }
    return std::nullopt;
  }
  const auto cols = nonemptyColumns(d);
  const long full = (1L << rows) - 1;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : best)
  for (long s = 1; s < full; ++s) {
    const long lhs = subsetSum(alpha, static_cast<RowSet>(s));
    if (lhs == 0) continue;
    if (lhs > thetaFromColumns(cols, static_cast<RowSet>(s), rows))
      best = std::min(best, subsetScanKey(static_cast<RowSet>(s), rows));
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  // Decode the key: low `rows` bits hold the complement of the bit-reversed set.
  const RowSet reversed = ~best & allRows(rows);
  RowSet s = 0;
  for (int r = 0; r < rows; ++r)
    if ((reversed >> r) & 1u) s |= RowSet{1} << (rows - 1 - r);
  return InfeasibleSubset{s, subsetSum(alpha, s), theta(d, s)};
}

Membership membership(const Diagram& d, const ExponentVector& alpha, Exec exec) {
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("negative content entry");
  Membership m;
  m.violated = firstViolation(d, alpha, exec);
  m.degreeMismatch = subsetSum(alpha, allRows(d.rows())) != d.size();
  m.member = !m.degreeMismatch && !m.violated;
  return m;
}

std::vector<ExponentVector> schubitopeLatticePoints(const Diagram& d, Exec exec) {
  const int rows = d.rows();
  const auto table = thetaTable(d, exec);
  std::vector<int> hi(rows);
  for (int i = 0; i < rows; ++i) hi[i] = table[1L << i];

  std::vector<ExponentVector> candidates;
  ExponentVector a(rows, 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == rows - 1) {
      if (remaining <= hi[i]) {
        a[i] = remaining;
        candidates.push_back(a);
      }
      return;
    }
    for (int v = 0; v <= std::min(hi[i], remaining); ++v) {
      a[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  if (rows == 0) return d.size() == 0 ? std::vector<ExponentVector>{ExponentVector{}}
                                      : std::vector<ExponentVector>{};
  rec(rec, 0, d.size());

  std::vector<char> keep(candidates.size(), 0);
  const long full = (1L << rows) - 1;
  parallelFor(candidates.size(), exec, [&](std::size_t k) {
    const auto& alpha = candidates[k];
    std::vector<long> sums(full + 1, 0);
    for (long s = 1; s <= full; ++s) {
      sums[s] = sums[s & (s - 1)] + alpha[std::countr_zero(static_cast<unsigned long>(s))];
      if (s != full && sums[s] > table[s]) return;
    }
    keep[k] = 1;
  });
  std::vector<ExponentVector> out;
  for (std::size_t k = 0; k < candidates.size(); ++k)
    if (keep[k]) out.push_back(std::move(candidates[k]));
  return out;
}

}  // namespace schubvan::kernels
