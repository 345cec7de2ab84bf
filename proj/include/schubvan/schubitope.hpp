#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "schubvan/diagram.hpp"
#include "schubvan/lp.hpp"

namespace schubvan {

enum class Bracket : char { Open = '(', Close = ')', Star = '*' };
using ColumnWord = std::vector<Bracket>;

// Column c read top to bottom: '(' for (r,c) not in D with r in S, ')' for
// (r,c) in D with r not in S, '*' for (r,c) in D with r in S.
ColumnWord columnWord(const Diagram& d, int c, RowSet s);
// Matched "()" pairs plus stars.
int thetaColumn(const ColumnWord& word);
int theta(const Diagram& d, RowSet s);
// Same quantity computed from the column bitmask without building the word.
int thetaColumnMask(RowSet column, RowSet s, int rows);

inline RowSet allRows(int rows) {
  return rows >= 64 ? ~RowSet{0} : (RowSet{1} << rows) - 1;
}

// Witness that alpha is outside the Schubitope: sum_{i in S} alpha_i = lhs > rhs = theta_D(S).
struct InfeasibleSubset {
  RowSet subset = 0;
  long lhs = 0;
  long rhs = 0;
  bool operator==(const InfeasibleSubset&) const = default;
};

struct Membership {
  bool member = false;
  bool degreeMismatch = false;           // sum(alpha) != |D|
  std::optional<InfeasibleSubset> violated;  // first violated inequality
};

inline constexpr int kMaxSubsetScanRows = 22;

// Proper nonempty subsets by increasing cardinality, then lexicographically by
// sorted element list. Throws std::domain_error when rows > kMaxSubsetScanRows.
Membership schubitopeMembership(const Diagram& d, const ExponentVector& alpha);

// Lexicographic combinations of the row set, all cardinalities 1..rows-1, in scan order.
std::vector<RowSet> subsetScanOrder(int rows);
// Sort key reproducing the scan order (smaller key comes first).
std::uint64_t subsetScanKey(RowSet s, int rows);

// Labels aligned with diagram.cells() order.
struct Filling {
  Diagram diagram;
  std::vector<int> labels;

  int label(int row, int col) const;
  bool columnStrict() const;                          // (a)
  bool rowBounded() const;                            // (b)
  ExponentVector content() const;                     // (c)
  bool operator==(const Filling&) const = default;
};

bool isTableau(const Filling& f, const ExponentVector& alpha);

// All fillings with strictly increasing columns, label <= row, and content alpha.
// Exhaustive backtracking with a memo of dead (column, remaining content) states.
std::vector<Filling> enumerateTab(const Diagram& d, const ExponentVector& alpha,
                                  std::size_t limit = static_cast<std::size_t>(-1));
std::optional<Filling> findTableau(const Diagram& d, const ExponentVector& alpha);

// Point of P(D, alpha): entries alpha_ij, i a row label, j a column.
struct RelaxationPoint {
  int rows = 0;
  int cols = 0;
  std::vector<mpq_class> entries;  // row-major (i-1)*cols + (j-1)

  const mpq_class& at(int i, int j) const { return entries[(i - 1) * cols + (j - 1)]; }
  mpq_class& at(int i, int j) { return entries[(i - 1) * cols + (j - 1)]; }
  bool integral() const;
  bool operator==(const RelaxationPoint&) const = default;
};

RelaxationPoint fillingToRelaxationPoint(const Filling& f);
// (I) 0 <= a_ij <= 1, (II) sum_j a_ij = alpha_i, (III) sum_{i<=s} a_ij >= #{(i,j) in D : i <= s}.
bool satisfiesRelaxation(const Diagram& d, const ExponentVector& alpha, const RelaxationPoint& p);

// Farkas multipliers over the full constraint system of P(D, alpha), each indexed
// (i-1)*cols + (j-1) or (s-1)*cols + (j-1):
//   upper[i,j]    >= 0 on  a_ij <= 1
//   content[i]    free on  sum_j a_ij = alpha_i
//   rowBound[s,j] >= 0 on  -sum_{i<=s} a_ij <= -#{(i,j) in D : i <= s}
// Their combination has every a_ij coefficient >= 0 and right-hand side -1.
struct FarkasCertificate {
  int rows = 0;
  int cols = 0;
  std::vector<mpq_class> upper;
  std::vector<mpq_class> content;
  std::vector<mpq_class> rowBound;
  bool operator==(const FarkasCertificate&) const = default;
};

using FeasibilityCertificate =
    std::variant<RelaxationPoint, Filling, FarkasCertificate, InfeasibleSubset>;

inline bool isFeasible(const FeasibilityCertificate& c) {
  return std::holds_alternative<RelaxationPoint>(c) || std::holds_alternative<Filling>(c);
}

// The relaxation as an LP. Row-bound constraints are only emitted at rows that
// carry a cell of the column; the others are implied by nonnegativity.
lp::Problem buildRelaxation(const Diagram& d, const ExponentVector& alpha);

// Decides P(D, alpha) != empty. Returns a RelaxationPoint or a FarkasCertificate.
// Throws std::invalid_argument on sum(alpha) != |D| or length mismatch.
FeasibilityCertificate lpFeasible(const Diagram& d, const ExponentVector& alpha,
                                  lp::Stats* stats = nullptr);

struct FacetInequality {
  RowSet subset = 0;
  int bound = 0;
};

// Irredundant Schubitope inequalities (one per facet) restricted to the rows
// where some lattice point is nonzero. `points` are the lattice points of S_D.
std::vector<FacetInequality> facetInequalities(const Diagram& d,
                                               const std::vector<ExponentVector>& points);

std::vector<int> rowSetToList(RowSet s);
RowSet rowSetFromList(const std::vector<int>& rows);

}  // namespace schubvan
