#include "schubvan/schubert.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubvan/diagram.hpp"
#include "schubvan/schubitope.hpp"

namespace schubvan {

namespace {

Polynomial longestPolynomial(int n) {
  ExponentVector e(n);
  for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
  return Polynomial::monomial(std::move(e));
}

}  // namespace

Polynomial schubertPolynomial(const Permutation& w, AscentChoice choice) {
  const int n = w.size();
  if (n == 0) return Polynomial::one(0);
  std::vector<int> steps;
  Permutation u = w;
  while (u.length() < binomial2(n)) {
    const auto asc = u.ascents();
    const int i = choice == AscentChoice::First ? asc.front() : asc.back();
    steps.push_back(i);
    u = u.timesSimple(i);
  }
  Polynomial p = longestPolynomial(n);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) p = dividedDifference(p, *it);
  return p;
}

SchubertTable::SchubertTable(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("table size must be positive");
  const Permutation top = Permutation::longest(n);
  polys_.emplace(top, longestPolynomial(n));
  std::vector<Permutation> level{top};
  while (!level.empty()) {
    std::vector<Permutation> next;
    for (const auto& u : level) {
      const Polynomial& pu = polys_.at(u);
      for (int i : u.descents()) {
        Permutation w = u.timesSimple(i);
        if (polys_.count(w)) continue;
        polys_.emplace(w, dividedDifference(pu, i));
        next.push_back(std::move(w));
      }
    }
    level = std::move(next);
  }
}

bool SchubertTable::covers(const Permutation& w) const {
  if (w.size() <= n_) return true;
  // Trailing fixed points can be dropped.
  for (int i = n_ + 1; i <= w.size(); ++i)
    if (w(i) != i) return false;
  return true;
}

const Polynomial& SchubertTable::operator()(const Permutation& w) const {
  if (!covers(w)) throw std::out_of_range("permutation outside the table");
  std::vector<int> word = w.word();
  word.resize(n_ > w.size() ? w.size() : n_);
  return polys_.at(Permutation(std::move(word)).embed(n_));
}

Polynomial schubertFor(const Permutation& w, int numVars, const SchubertTable* table) {
  if (table && table->covers(w)) return (*table)(w).withNumVars(numVars);
  // Strip trailing fixed points before the chain walk.
  int m = w.size();
  while (m > 0 && w(m) == m) --m;
  std::vector<int> word(w.word().begin(), w.word().begin() + m);
  return schubertPolynomial(Permutation(std::move(word))).withNumVars(numVars);
}

OracleValue intersectionNumber(std::span<const Permutation> ws, const SchubertTable* table) {
  const int n = maxSize(ws);
  int total = 0;
  for (const auto& w : ws) total += w.length();
  if (total != binomial2(n)) return {0, true};
  std::vector<Polynomial> polys;
  for (const auto& w : ws) polys.push_back(schubertFor(w, n, table));
  return {topDividedDifference(polys, n), false};
}

OracleValue asymmetricCoefficient(std::span<const Permutation> factors, const Permutation& target,
                                  const SchubertTable* table) {
  std::vector<Permutation> all(factors.begin(), factors.end());
  all.push_back(target);
  const int n = maxSize(all);
  all.back() = target.embed(n).leftLongest();
  return intersectionNumber(all, table);
}

std::map<Permutation, mpz_class> schubertExpansion(const Polynomial& f) {
  std::map<Permutation, mpz_class> out;
  Polynomial rest = f;
  while (!rest.isZero()) {
    const auto& [e, c] = *rest.terms().begin();
    const Permutation w = Permutation::fromCode(e);
    const mpz_class coeff = c;
    out[w] += coeff;
    rest = rest - schubertFor(w, rest.numVars(), nullptr) * coeff;
  }
  return out;
}

std::vector<ExponentVector> compositions(int total, int parts) {
  std::vector<ExponentVector> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  ExponentVector a(parts, 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == parts - 1) {
      a[i] = remaining;
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      a[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

bool verifySNP(const Permutation& w, const SchubertTable* table) {
  const int n = w.size();
  const Polynomial p = schubertFor(w, n, table);
  const Diagram d = Diagram::rothe(w);
  std::set<ExponentVector> points;
  for (auto& a : compositions(w.length(), n))
    if (schubitopeMembership(d, a).member) points.insert(std::move(a));
  return points == p.support();
}

}  // namespace schubvan
