#include "schubvan/gpermutahedron.hpp"

#include <bit>
#include <stdexcept>

#include "schubvan/lp.hpp"
#include "schubvan/schubitope.hpp"

namespace schubvan {

SubmodularFn::SubmodularFn(int n, std::vector<mpq_class> values) : n_(n), values_(std::move(values)) {
  if (n < 0 || n > kMaxGround) throw std::invalid_argument("ground set too large");
  if (values_.size() != (std::size_t{1} << n)) throw std::invalid_argument("need 2^n values");
  if (sgn(values_[0]) != 0) throw std::invalid_argument("z(empty) must be 0");
  if (n <= kCheckedGround && !isSubmodular()) throw std::invalid_argument("set function is not submodular");
}

SubmodularFn SubmodularFn::zero(int n) { return SubmodularFn(n, std::vector<mpq_class>(std::size_t{1} << n)); }

SubmodularFn SubmodularFn::standardPermutahedron(int n) {
  std::vector<mpq_class> v(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < v.size(); ++s) {
    const int k = std::popcount(s);
    long total = 0;
    for (int j = n - k; j <= n - 1; ++j) total += j;
    v[s] = total;
  }
  return SubmodularFn(n, std::move(v));
}

SubmodularFn SubmodularFn::fromSchubitope(const Diagram& d) {
  const int n = d.rows();
  std::vector<mpq_class> v(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < v.size(); ++s) v[s] = theta(d, s);
  return SubmodularFn(n, std::move(v));
}

bool SubmodularFn::integral() const {
  for (const auto& v : values_)
    if (v.get_den() != 1) return false;
  return true;
}

bool SubmodularFn::isSubmodular() const {
  const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
  for (std::uint32_t s = 0; s <= full; ++s)
    for (int i = 0; i < n_; ++i) {
      const std::uint32_t bi = std::uint32_t{1} << i;
      if (s & bi) continue;
      for (int j = i + 1; j < n_; ++j) {
        const std::uint32_t bj = std::uint32_t{1} << j;
        if (s & bj) continue;
        if (values_[s | bi] + values_[s | bj] < values_[s | bi | bj] + values_[s]) return false;
      }
    }
  return true;
}

bool SubmodularFn::isSubmodularPairwise() const {
  const std::uint32_t count = std::uint32_t{1} << n_;
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = a + 1; b < count; ++b)
      if (values_[a] + values_[b] < values_[a | b] + values_[a & b]) return false;
  return true;
}

SubmodularFn SubmodularFn::operator+(const SubmodularFn& o) const {
  if (o.n_ != n_) throw std::invalid_argument("ground set sizes differ");
  std::vector<mpq_class> v(values_.size());
  for (std::size_t s = 0; s < v.size(); ++s) v[s] = values_[s] + o.values_[s];
  return SubmodularFn(n_, std::move(v));
}

std::vector<mpq_class> GPermutahedron::vertexOf(const Permutation& w) const {
  if (w.size() != dim()) throw std::invalid_argument("permutation size differs from ground set");
  std::vector<mpq_class> v(dim());
  std::uint32_t prefix = 0;
  for (int k = 1; k <= dim(); ++k) {
    const std::uint32_t next = prefix | (std::uint32_t{1} << (w(k) - 1));
    v[w(k) - 1] = z_(next) - z_(prefix);
    prefix = next;
  }
  return v;
}

bool GPermutahedron::contains(const std::vector<mpq_class>& t) const {
  if (static_cast<int>(t.size()) != dim()) return false;
  const std::uint32_t full = (std::uint32_t{1} << dim()) - 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    mpq_class total = 0;
    for (int i = 0; i < dim(); ++i)
      if ((s >> i) & 1u) total += t[i];
    if (s == full ? total != z_(s) : total > z_(s)) return false;
  }
  return true;
}

bool GPermutahedron::contains(const LatticePoint& t) const {
  std::vector<mpq_class> q(t.begin(), t.end());
  return contains(q);
}

std::set<LatticePoint> GPermutahedron::latticePoints() const {
  if (!z_.integral()) throw std::invalid_argument("lattice points need an integral z");
  const int n = dim();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<long> z(full + 1);
  for (std::uint32_t s = 0; s <= full; ++s) z[s] = z_(s).get_num().get_si();
  std::vector<long> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    hi[i] = z[std::uint32_t{1} << i];
    lo[i] = z[full] - z[full & ~(std::uint32_t{1} << i)];
  }
  std::set<LatticePoint> out;
  if (n == 0) {
    out.insert({});
    return out;
  }
  LatticePoint t(n);
  auto valid = [&]() {
    for (std::uint32_t s = 1; s < full; ++s) {
      long total = 0;
      for (int i = 0; i < n; ++i)
        if ((s >> i) & 1u) total += t[i];
      if (total > z[s]) return false;
    }
    return true;
  };
  // Odometer over the box with the last coordinate fixed by the sum.
  auto rec = [&](auto&& self, int i, long partial) -> void {
    if (i == n - 1) {
      t[i] = z[full] - partial;
      if (t[i] >= lo[i] && t[i] <= hi[i] && valid()) out.insert(t);
      return;
    }
    for (long v = lo[i]; v <= hi[i]; ++v) {
      t[i] = v;
      self(self, i + 1, partial + v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

GPermutahedron minkowskiSum(const GPermutahedron& p, const GPermutahedron& q) {
  return GPermutahedron(p.z() + q.z());
}

std::set<LatticePoint> minkowskiSum(const std::set<LatticePoint>& a, const std::set<LatticePoint>& b) {
  std::set<LatticePoint> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
      LatticePoint s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      out.insert(std::move(s));
    }
  return out;
}

bool checkIntegerDecomposition(const GPermutahedron& p, const GPermutahedron& q) {
  if (!p.z().integral() || !q.z().integral())
    throw std::invalid_argument("integer decomposition needs integral polytopes");
  return minkowskiSum(p.latticePoints(), q.latticePoints()) == minkowskiSum(p, q).latticePoints();
}

std::vector<LatticePoint> convexHullVertices(const std::set<LatticePoint>& points) {
  std::vector<LatticePoint> pts(points.begin(), points.end()), out;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    // Is pts[k] a convex combination of the other points?
    lp::Problem prob;
    prob.numVars = static_cast<int>(pts.size()) - 1;
    const std::size_t dim = pts[k].size();
    for (std::size_t c = 0; c < dim; ++c) {
      std::vector<std::pair<int, mpq_class>> terms;
      int col = 0;
      for (std::size_t q = 0; q < pts.size(); ++q) {
        if (q == k) continue;
        if (pts[q][c] != 0) terms.emplace_back(col, pts[q][c]);
        ++col;
      }
      prob.add(std::move(terms), lp::Sense::Equal, pts[k][c]);
    }
    std::vector<std::pair<int, mpq_class>> ones;
    for (int col = 0; col < prob.numVars; ++col) ones.emplace_back(col, 1);
    prob.add(std::move(ones), lp::Sense::Equal, 1);
    if (std::holds_alternative<lp::Infeasible>(lp::solve(prob))) out.push_back(pts[k]);
  }
  return out;
}

}  // namespace schubvan
