#include "schubvan/lp.hpp"

#include <stdexcept>

namespace schubvan::lp {

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * (cols + 1)) {}

  mpq_class& at(int r, int c) { return data_[r * (cols_ + 1) + c]; }
  mpq_class& rhs(int r) { return at(r, cols_); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_;
  int cols_;
  std::vector<mpq_class> data_;
};

}  // namespace

Result solve(const Problem& problem, Stats* stats) {
  const int n = problem.numVars;
  const int m = static_cast<int>(problem.constraints.size());

  // Column layout: [structural | slacks | artificials].
  int numSlacks = 0;
  for (const auto& c : problem.constraints)
    if (c.sense != Sense::Equal) ++numSlacks;

  // Each row is first normalized to "a.x (+ s) = b" with a.x <= b for
  // inequalities, then flipped (flip = -1) when b < 0.
  std::vector<int> flip(m, 1), slackCol(m, -1);
  std::vector<bool> needsArtificial(m, false);
  int numArtificial = 0, nextSlack = n;
  for (int k = 0; k < m; ++k) {
    const auto& c = problem.constraints[k];
    mpq_class b = c.sense == Sense::GreaterEqual ? mpq_class(-c.rhs) : c.rhs;
    if (c.sense != Sense::Equal) slackCol[k] = nextSlack++;
    flip[k] = sgn(b) < 0 ? -1 : 1;
    needsArtificial[k] = c.sense == Sense::Equal || flip[k] < 0;
    if (needsArtificial[k]) ++numArtificial;
  }
  const int totalCols = n + numSlacks + numArtificial;

  Tableau t(m, totalCols);
  std::vector<int> basis(m), initCol(m);
  std::vector<bool> isArtificial(totalCols, false);
  int nextArt = n + numSlacks;
  for (int k = 0; k < m; ++k) {
    const auto& c = problem.constraints[k];
    const int orient = c.sense == Sense::GreaterEqual ? -1 : 1;
    const int s = orient * flip[k];
    for (const auto& [j, a] : c.terms) {
      if (j < 0 || j >= n) throw std::out_of_range("constraint references unknown variable");
      t.at(k, j) += s * a;
    }
    t.rhs(k) = s * c.rhs;
    if (slackCol[k] >= 0) t.at(k, slackCol[k]) = flip[k];
    if (needsArtificial[k]) {
      isArtificial[nextArt] = true;
      t.at(k, nextArt) = 1;
      basis[k] = nextArt++;
    } else {
      basis[k] = slackCol[k];
    }
    initCol[k] = basis[k];
  }

  // Reduced costs of the phase-1 objective (sum of artificials); last entry holds -z.
  std::vector<mpq_class> cost(totalCols + 1);
  for (int j = 0; j < totalCols; ++j)
    if (isArtificial[j]) cost[j] = 1;
  for (int k = 0; k < m; ++k) {
    if (!isArtificial[basis[k]]) continue;
    for (int j = 0; j <= totalCols; ++j)
      if (sgn(t.at(k, j)) != 0) cost[j] -= t.at(k, j);
  }

  std::vector<int> nz;
  nz.reserve(totalCols + 1);
  long pivots = 0;
  for (;;) {
    int enter = -1;
    for (int j = 0; j < totalCols; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    int leave = -1;
    mpq_class best;
    for (int r = 0; r < m; ++r) {
      const mpq_class& a = t.at(r, enter);
      if (sgn(a) <= 0) continue;
      mpq_class ratio = t.rhs(r) / a;
      if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    // Phase-1 objective is bounded below by zero.
    if (leave < 0) throw std::logic_error("phase-1 simplex reported unbounded");

    mpq_class piv = t.at(leave, enter);
    nz.clear();
    for (int j = 0; j <= totalCols; ++j) {
      mpq_class& v = t.at(leave, j);
      if (sgn(v) != 0) {
        v /= piv;
        nz.push_back(j);
      }
    }
    for (int r = 0; r < m; ++r) {
      if (r == leave) continue;
      mpq_class f = t.at(r, enter);
      if (sgn(f) == 0) continue;
      for (int j : nz) t.at(r, j) -= f * t.at(leave, j);
    }
    mpq_class f = cost[enter];
    for (int j : nz) cost[j] -= f * t.at(leave, j);
    basis[leave] = enter;
    ++pivots;
  }
  if (stats) stats->pivots = pivots;

  mpq_class z = -cost[totalCols];
  if (sgn(z) == 0) {
    Feasible out;
    out.x.assign(n, 0);
    for (int r = 0; r < m; ++r)
      if (basis[r] < n) out.x[basis[r]] = t.rhs(r);
    return out;
  }

  // Dual y_k = c(initCol_k) - reducedCost(initCol_k); the Farkas vector for the
  // "<=" normalized rows is -flip_k * y_k / z.
  Infeasible out;
  out.multipliers.resize(m);
  for (int k = 0; k < m; ++k) {
    const int col = initCol[k];
    mpq_class y = (isArtificial[col] ? mpq_class(1) : mpq_class(0)) - cost[col];
    out.multipliers[k] = -flip[k] * y / z;
  }
  return out;
}

bool satisfies(const Problem& problem, const std::vector<mpq_class>& x) {
  if (static_cast<int>(x.size()) != problem.numVars) return false;
  for (const auto& v : x)
    if (sgn(v) < 0) return false;
  for (const auto& c : problem.constraints) {
    mpq_class lhs = 0;
    for (const auto& [j, a] : c.terms) lhs += a * x[j];
    switch (c.sense) {
      case Sense::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Sense::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
      case Sense::Equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

bool verifyFarkas(const Problem& problem, const std::vector<mpq_class>& multipliers) {
  if (multipliers.size() != problem.constraints.size()) return false;
  std::vector<mpq_class> combo(problem.numVars);
  mpq_class rhs = 0;
  for (std::size_t k = 0; k < multipliers.size(); ++k) {
    const auto& c = problem.constraints[k];
    const mpq_class& l = multipliers[k];
    if (c.sense != Sense::Equal && sgn(l) < 0) return false;
    const int orient = c.sense == Sense::GreaterEqual ? -1 : 1;
    for (const auto& [j, a] : c.terms) combo[j] += orient * l * a;
    rhs += orient * l * c.rhs;
  }
  for (const auto& v : combo)
    if (sgn(v) < 0) return false;
  return sgn(rhs) < 0;
}

}  // namespace schubvan::lp
