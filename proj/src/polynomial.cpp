#include "schubvan/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace schubvan {

Polynomial Polynomial::one(int numVars) {
  Polynomial p(numVars);
  p.terms_[ExponentVector(numVars, 0)] = 1;
  return p;
}

Polynomial Polynomial::monomial(ExponentVector exponent, mpz_class coeff) {
  Polynomial p(static_cast<int>(exponent.size()));
  p.addTerm(exponent, coeff);
  return p;
}

void Polynomial::addTerm(const ExponentVector& exponent, const mpz_class& coeff) {
  if (static_cast<int>(exponent.size()) != numVars_)
    throw std::invalid_argument("exponent length differs from variable count");
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

mpz_class Polynomial::coefficient(const ExponentVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::set<ExponentVector> Polynomial::support() const {
  std::set<ExponentVector> s;
  for (const auto& [e, c] : terms_) s.insert(e);
  return s;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

Polynomial Polynomial::withNumVars(int n) const {
  Polynomial p(n);
  for (const auto& [e, c] : terms_) {
    ExponentVector f(n, 0);
    for (int i = 0; i < static_cast<int>(e.size()); ++i) {
      if (i < n) f[i] = e[i];
      else if (e[i] != 0) throw std::invalid_argument("cannot drop a variable that occurs");
    }
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

Polynomial Polynomial::swapVariables(int i) const {
  if (i < 1 || i >= numVars_) throw std::out_of_range("variable index out of range");
  Polynomial p(numVars_);
  for (const auto& [e, c] : terms_) {
    ExponentVector f = e;
    std::swap(f[i - 1], f[i]);
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.numVars_ != numVars_) throw std::invalid_argument("variable counts differ");
  Polynomial p = *this;
  for (const auto& [e, c] : o.terms_) p.addTerm(e, c);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (o.numVars_ != numVars_) throw std::invalid_argument("variable counts differ");
  Polynomial p = *this;
  for (const auto& [e, c] : o.terms_) p.addTerm(e, -c);
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.numVars_ != numVars_) throw std::invalid_argument("variable counts differ");
  Polynomial p(numVars_);
  ExponentVector e(numVars_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      for (int i = 0; i < numVars_; ++i) e[i] = a[i] + b[i];
      p.addTerm(e, ca * cb);
    }
  return p;
}

Polynomial Polynomial::operator*(const mpz_class& c) const {
  Polynomial p(numVars_);
  if (sgn(c) == 0) return p;
  for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
  return p;
}

std::string Polynomial::dump() const {
  std::ostringstream out;
  for (const auto& [e, c] : terms_) {
    out << c.get_str();
    for (int x : e) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

Polynomial Polynomial::parseDump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Polynomial> p;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string coeff;
    if (!(ls >> coeff)) continue;
    ExponentVector e;
    int x;
    while (ls >> x) e.push_back(x);
    if (!p) p.emplace(static_cast<int>(e.size()));
    p->addTerm(e, mpz_class(coeff));
  }
  return p ? *p : Polynomial(0);
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    mpz_class a = abs(c);
    std::string mono;
    for (int i = 0; i < static_cast<int>(e.size()); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) s += a.get_str();
    else if (a == 1) s += mono;
    else s += a.get_str() + "*" + mono;
  }
  return s;
}

Polynomial Polynomial::parse(std::string_view text, int numVars) {
  Polynomial p(numVars);
  std::size_t k = 0;
  auto skip = [&] {
    while (k < text.size() && (text[k] == ' ' || text[k] == '*')) ++k;
  };
  auto number = [&] {
    std::size_t b = k;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    if (b == k) throw std::invalid_argument("expected a number in polynomial");
    return std::string(text.substr(b, k - b));
  };
  int sign = 1;
  skip();
  if (k < text.size() && text[k] == '-') {
    sign = -1;
    ++k;
  }
  while (true) {
    skip();
    mpz_class coeff = 1;
    ExponentVector e(numVars, 0);
    bool any = false;
    if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
      coeff = mpz_class(number());
      any = true;
    }
    while (true) {
      skip();
      if (k >= text.size() || text[k] != 'x') break;
      ++k;
      const int var = std::stoi(number());
      if (var < 1 || var > numVars) throw std::invalid_argument("variable index out of range");
      int power = 1;
      if (k < text.size() && text[k] == '^') {
        ++k;
        power = std::stoi(number());
      }
      e[var - 1] += power;
      any = true;
    }
    if (!any) throw std::invalid_argument("empty term in polynomial");
    p.addTerm(e, sign * coeff);
    skip();
    if (k >= text.size()) break;
    if (text[k] == '+') sign = 1;
    else if (text[k] == '-') sign = -1;
    else throw std::invalid_argument("unexpected character in polynomial");
    ++k;
  }
  return p;
}

Polynomial dividedDifference(const Polynomial& f, int i) {
  if (i < 1 || i >= f.numVars()) throw std::out_of_range("divided difference index out of range");
  Polynomial out(f.numVars());
  for (const auto& [e, c] : f.terms()) {
    const int a = e[i - 1], b = e[i];
    if (a == b) continue;
    // x_i^a x_{i+1}^b - x_i^b x_{i+1}^a over x_i - x_{i+1}, with m = min(a,b):
    // sign * x_i^m x_{i+1}^m * sum_{t=0}^{|a-b|-1} x_i^{|a-b|-1-t} x_{i+1}^t.
    const int lo = std::min(a, b), gap = std::abs(a - b);
    const mpz_class coeff = a > b ? c : mpz_class(-c);
    ExponentVector g = e;
    for (int t = 0; t < gap; ++t) {
      g[i - 1] = lo + gap - 1 - t;
      g[i] = lo + t;
      out.addTerm(g, coeff);
    }
  }
  return out;
}

Polynomial multiplyBounded(const Polynomial& f, const Polynomial& g, const ExponentVector& bound) {
  if (f.numVars() != g.numVars() || static_cast<int>(bound.size()) != f.numVars())
    throw std::invalid_argument("variable counts differ");
  const int n = f.numVars();
  Polynomial p(n);
  ExponentVector e(n);
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        e[i] = a[i] + b[i];
        ok = e[i] <= bound[i];
      }
      if (ok) p.addTerm(e, ca * cb);
    }
  return p;
}

mpz_class productCoefficient(std::span<const Polynomial> fs, const ExponentVector& target) {
  const int n = static_cast<int>(target.size());
  if (fs.empty()) return std::all_of(target.begin(), target.end(), [](int x) { return x == 0; }) ? 1 : 0;
  Polynomial acc = Polynomial::one(n);
  for (std::size_t k = 0; k + 1 < fs.size(); ++k) {
    acc = multiplyBounded(acc, fs[k].withNumVars(n), target);
    if (acc.isZero()) return 0;
  }
  // Last factor: match complements instead of forming the product.
  const Polynomial last = fs.back().withNumVars(n);
  mpz_class total = 0;
  ExponentVector need(n);
  for (const auto& [a, ca] : acc.terms()) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      need[i] = target[i] - a[i];
      ok = need[i] >= 0;
    }
    if (ok) total += ca * last.coefficient(need);
  }
  return total;
}

mpz_class topDividedDifference(std::span<const Polynomial> fs, int n) {
  if (n <= 1) return productCoefficient(fs, ExponentVector(std::max(n, 0), 0));
  if (fs.empty()) return 0;
  const ExponentVector bound(n, n - 1);
  Polynomial acc = Polynomial::one(n);
  for (std::size_t k = 0; k + 1 < fs.size(); ++k) {
    acc = multiplyBounded(acc, fs[k].withNumVars(n), bound);
    if (acc.isZero()) return 0;
  }
  const Polynomial last = fs.back().withNumVars(n);
  mpz_class total = 0;
  std::vector<char> seen(n);
  for (const auto& [a, ca] : acc.terms())
    for (const auto& [b, cb] : last.terms()) {
      std::fill(seen.begin(), seen.end(), 0);
      bool ok = true;
      int inversions = 0;
      for (int i = 0; i < n && ok; ++i) {
        const int e = a[i] + b[i];
        ok = e < n && !seen[e];
        if (!ok) break;
        seen[e] = 1;
        for (int j = 0; j < i; ++j) inversions += a[j] + b[j] < e;
      }
      if (!ok) continue;
      // Sign of the permutation carrying the staircase to a + b.
      if (inversions % 2) total -= ca * cb;
      else total += ca * cb;
    }
  return total;
}

}  // namespace schubvan
