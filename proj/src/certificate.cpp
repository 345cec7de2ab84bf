#include "schubvan/certificate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schubvan {

std::string_view outcomeName(Outcome o) {
  switch (o) {
    case Outcome::Vanishes: return "VANISHES";
    case Outcome::Inconclusive: return "INCONCLUSIVE";
    case Outcome::DegreeMismatch: return "DEGREE_MISMATCH";
  }
  return "?";
}

Outcome parseOutcome(std::string_view name) {
  if (name == "VANISHES") return Outcome::Vanishes;
  if (name == "INCONCLUSIVE") return Outcome::Inconclusive;
  if (name == "DEGREE_MISMATCH") return Outcome::DegreeMismatch;
  throw std::invalid_argument("unknown outcome: " + std::string(name));
}

std::string_view certificateKind(const Certificate& c) {
  struct {
    std::string_view operator()(const InfeasibleSubset&) const { return "subset"; }
    std::string_view operator()(const FarkasCertificate&) const { return "farkas"; }
    std::string_view operator()(const RelaxationPoint&) const { return "relaxation_point"; }
    std::string_view operator()(const Filling&) const { return "filling"; }
    std::string_view operator()(const BruhatWitness&) const { return "bruhat_pair"; }
    std::string_view operator()(const DescentCyclingWitness&) const { return "dc_path"; }
    std::string_view operator()(const DoomedFilter&) const { return "doomed_filter"; }
  } visitor;
  return std::visit(visitor, c);
}

namespace check {

std::vector<Cell> rotheCells(const Permutation& w) {
  const int n = w.size();
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      // j < w(i) and i < w^{-1}(j): w(i) > j and the value j sits further right.
      if (j >= w(i)) continue;
      int pos = 0;
      for (int a = 1; a <= n; ++a)
        if (w(a) == j) pos = a;
      if (i < pos) cells.push_back({i, j});
    }
  return cells;
}

Diagram concatenated(std::span<const Permutation> ws, bool compress) {
  int n = 0;
  for (const auto& w : ws) n = std::max(n, w.size());
  std::vector<Cell> cells;
  int offset = 0;
  for (const auto& w : ws) {
    for (const Cell& c : rotheCells(w.embed(n))) cells.push_back({c.row, c.col + offset});
    offset += n;
  }
  if (compress) {
    std::set<int> used;
    for (const Cell& c : cells) used.insert(c.col);
    std::vector<int> order(used.begin(), used.end());
    for (Cell& c : cells)
      c.col = static_cast<int>(std::lower_bound(order.begin(), order.end(), c.col) - order.begin()) + 1;
    offset = static_cast<int>(order.size());
  }
  return Diagram(n, offset, std::move(cells));
}

int theta(const Diagram& d, RowSet s) {
  int total = 0;
  for (int c = 1; c <= d.cols(); ++c) {
    int open = 0;
    for (int r = 1; r <= d.rows(); ++r) {
      const bool cell = d.contains(r, c), in = inRowSet(s, r);
      if (cell && in) {
        ++total;
      } else if (!cell && in) {
        ++open;
      } else if (cell && open > 0) {
        --open;
        ++total;
      }
    }
  }
  return total;
}

bool subsetCertificate(const Diagram& d, const ExponentVector& alpha, const InfeasibleSubset& c) {
  if (static_cast<int>(alpha.size()) != d.rows() || c.subset == 0) return false;
  if (d.rows() < 64 && (c.subset >> d.rows()) != 0) return false;
  long lhs = 0;
  for (int r = 1; r <= d.rows(); ++r)
    if (inRowSet(c.subset, r)) lhs += alpha[r - 1];
  const long rhs = check::theta(d, c.subset);
  return lhs == c.lhs && rhs == c.rhs && lhs > rhs;
}

bool farkasCertificate(const Diagram& d, const ExponentVector& alpha, const FarkasCertificate& c) {
  const int n = d.rows(), m = d.cols();
  const std::size_t nm = static_cast<std::size_t>(n) * m;
  if (c.rows != n || c.cols != m || c.upper.size() != nm || c.content.size() != static_cast<std::size_t>(n) ||
      c.rowBound.size() != nm || static_cast<int>(alpha.size()) != n)
    return false;
  for (const auto& y : c.upper)
    if (sgn(y) < 0) return false;
  for (const auto& y : c.rowBound)
    if (sgn(y) < 0) return false;
  auto at = [m](const std::vector<mpq_class>& v, int i, int j) -> const mpq_class& {
    return v[static_cast<std::size_t>(i - 1) * m + (j - 1)];
  };
  mpq_class rhs = 0;
  for (int i = 1; i <= n; ++i) {
    rhs += c.content[i - 1] * alpha[i - 1];
    for (int j = 1; j <= m; ++j) rhs += at(c.upper, i, j);
  }
  for (int j = 1; j <= m; ++j) {
    int cells = 0;
    for (int s = 1; s <= n; ++s) {
      if (d.contains(s, j)) ++cells;
      rhs -= at(c.rowBound, s, j) * cells;
    }
  }
  if (sgn(rhs) >= 0) return false;
  for (int j = 1; j <= m; ++j) {
    // Coefficient of a_ij: upper + content - sum of row bounds with s >= i.
    mpq_class tail = 0;
    for (int i = n; i >= 1; --i) {
      tail += at(c.rowBound, i, j);
      if (at(c.upper, i, j) + c.content[i - 1] - tail < 0) return false;
    }
  }
  return true;
}

bool relaxationWitness(const Diagram& d, const ExponentVector& alpha, const RelaxationPoint& p) {
  const int n = d.rows(), m = d.cols();
  if (p.rows != n || p.cols != m || p.entries.size() != static_cast<std::size_t>(n) * m ||
      static_cast<int>(alpha.size()) != n)
    return false;
  for (const auto& v : p.entries)
    if (sgn(v) < 0 || v > 1) return false;
  for (int i = 1; i <= n; ++i) {
    mpq_class sum = 0;
    for (int j = 1; j <= m; ++j) sum += p.at(i, j);
    if (sum != alpha[i - 1]) return false;
  }
  for (int j = 1; j <= m; ++j) {
    mpq_class prefix = 0;
    int cells = 0;
    for (int s = 1; s <= n; ++s) {
      prefix += p.at(s, j);
      if (d.contains(s, j)) ++cells;
      if (prefix < cells) return false;
    }
  }
  return true;
}

bool tableauWitness(const Diagram& d, const ExponentVector& alpha, const Filling& f) {
  if (!(f.diagram == d) || f.labels.size() != d.cells().size()) return false;
  ExponentVector content(d.rows(), 0);
  for (std::size_t k = 0; k < f.labels.size(); ++k) {
    const int l = f.labels[k];
    if (l < 1 || l > d.cells()[k].row) return false;
    ++content[l - 1];
  }
  for (int c = 1; c <= d.cols(); ++c) {
    int prev = 0;
    for (int r = 1; r <= d.rows(); ++r) {
      if (!d.contains(r, c)) continue;
      const int l = f.label(r, c);
      if (l <= prev) return false;
      prev = l;
    }
  }
  return content == alpha;
}

bool bruhatLeqRank(const Permutation& u0, const Permutation& v0) {
  const int n = std::max(u0.size(), v0.size());
  const Permutation u = u0.embed(n), v = v0.embed(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int ru = 0, rv = 0;
      for (int a = 1; a <= i; ++a) {
        ru += u(a) >= j;
        rv += v(a) >= j;
      }
      if (ru > rv) return false;
    }
  return true;
}

bool bruhatWitness(std::span<const Permutation> ws, const BruhatWitness& c) {
  const int k = static_cast<int>(ws.size());
  if (c.i < 1 || c.j < 1 || c.i > k || c.j > k || c.i == c.j) return false;
  int n = 0;
  for (const auto& w : ws) n = std::max(n, w.size());
  const Permutation& wj = ws[c.j - 1];
  std::vector<int> flipped(n);
  const Permutation e = wj.embed(n);
  for (int a = 1; a <= n; ++a) flipped[a - 1] = n + 1 - e(a);
  return !bruhatLeqRank(ws[c.i - 1].embed(n), Permutation(flipped));
}

namespace {

bool up(const Permutation& w, int i) { return w(i) < w(i + 1); }

Triple embedTriple(std::span<const Permutation> ws) {
  int n = 0;
  for (const auto& w : ws) n = std::max(n, w.size());
  return {ws[0].embed(n), ws[1].embed(n), ws[2].embed(n)};
}

}  // namespace

bool isDcMove(const Triple& a, const Triple& b) {
  const int n = a[0].size();
  if (a[1].size() != n || a[2].size() != n || b[0].size() != n || b[1].size() != n || b[2].size() != n)
    return false;
  for (int i = 1; i < n; ++i) {
    // Which factors changed by s_i?
    std::array<bool, 3> moved{};
    bool ok = true;
    for (int f = 0; f < 3 && ok; ++f) {
      if (b[f] == a[f]) continue;
      if (b[f] == a[f].swapPositions(i, i + 1)) moved[f] = true;
      else ok = false;
    }
    if (!ok || (moved[0] + moved[1] + moved[2]) != 2) continue;
    const bool uu = up(a[0], i), vu = up(a[1], i), wu = up(a[2], i);
    // dc.1: u, v ascend and w descends; moves (u,w) or (v,w).
    if (uu && vu && !wu && moved[2]) return true;
    // dc.2: u descends, v and w ascend; moves (u,w) or (u,v).
    if (!uu && vu && wu && moved[0]) return true;
    // dc.3: v descends, u and w ascend; moves (v,w) or (u,v).
    if (uu && !vu && wu && moved[1]) return true;
  }
  return false;
}

bool descentCyclingWitness(std::span<const Permutation> ws, const DescentCyclingWitness& c) {
  if (ws.size() != 3 || c.path.empty()) return false;
  if (c.path.front() != embedTriple(ws)) return false;
  for (std::size_t k = 1; k < c.path.size(); ++k)
    if (!isDcMove(c.path[k - 1], c.path[k])) return false;
  const Triple& last = c.path.back();
  const int n = last[0].size();
  if (c.position < 1 || c.position >= n) return false;
  return up(last[0], c.position) && up(last[1], c.position) && up(last[2], c.position);
}

bool doomedFilter(std::span<const Permutation> ws, const DoomedFilter& c) {
  int n = 0;
  for (const auto& w : ws) n = std::max(n, w.size());
  std::set<std::pair<int, int>> roots(c.roots.begin(), c.roots.end());
  if (roots.size() != c.roots.size() || roots.empty()) return false;
  for (auto [m, q] : roots) {
    if (m < 1 || m >= q || q > n) return false;
    // Up-closed: every (m', q') with m' <= m and q' >= q.
    for (int a = 1; a <= m; ++a)
      for (int b = q; b <= n; ++b)
        if (!roots.count({a, b})) return false;
  }
  int tokens = 0;
  for (const auto& w0 : ws) {
    const Permutation w = w0.embed(n);
    for (auto [m, q] : roots) tokens += w(m) > w(q);
  }
  return tokens == c.tokens && tokens > static_cast<int>(roots.size());
}

bool schubitopeCertificate(const Diagram& d, const ExponentVector& alpha, const Certificate& c) {
  if (auto* s = std::get_if<InfeasibleSubset>(&c)) return subsetCertificate(d, alpha, *s);
  if (auto* f = std::get_if<FarkasCertificate>(&c)) return farkasCertificate(d, alpha, *f);
  if (auto* p = std::get_if<RelaxationPoint>(&c)) return relaxationWitness(d, alpha, *p);
  if (auto* t = std::get_if<Filling>(&c)) return tableauWitness(d, alpha, *t);
  return false;
}

}  // namespace check

}  // namespace schubvan
