#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "schubvan/permutation.hpp"

namespace schubvan {

// Sparse polynomial in x_1..x_n with integer coefficients; zero terms are never stored.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, mpz_class>;

  explicit Polynomial(int numVars = 0) : numVars_(numVars) {}

  static Polynomial one(int numVars);
  static Polynomial monomial(ExponentVector exponent, mpz_class coeff = 1);

  int numVars() const { return numVars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }

  void addTerm(const ExponentVector& exponent, const mpz_class& coeff);
  mpz_class coefficient(const ExponentVector& exponent) const;
  std::set<ExponentVector> support() const;
  int degree() const;

  // Pads with (or drops all-zero trailing) variables.
  Polynomial withNumVars(int n) const;
  // f(.., x_{i+1}, x_i, ..)
  Polynomial swapVariables(int i) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const mpz_class& c) const;
  bool operator==(const Polynomial& o) const { return numVars_ == o.numVars_ && terms_ == o.terms_; }

  // One term per line: "coeff e1 e2 ... en", lexicographic by exponent.
  std::string dump() const;
  static Polynomial parseDump(std::string_view text);
  // e.g. "x1^3*x2 + 2*x1^2*x2*x3"
  std::string str() const;
  // Inverse of str(); also accepts juxtaposed factors ("x1^3x2") and spaces.
  static Polynomial parse(std::string_view text, int numVars);

 private:
  int numVars_;
  Terms terms_;
};

// (f - s_i f) / (x_i - x_{i+1}), computed termwise.
Polynomial dividedDifference(const Polynomial& f, int i);

// Product keeping only exponents <= bound componentwise.
Polynomial multiplyBounded(const Polynomial& f, const Polynomial& g, const ExponentVector& bound);

// [x^target] prod(fs), pruning partial products by the target.
mpz_class productCoefficient(std::span<const Polynomial> fs, const ExponentVector& target);

// The constant d_{w0} prod(fs) in n variables, for a product of degree C(n,2).
// Equals the sum over sigma of sgn(sigma) [x^{sigma(staircase)}] prod(fs).
mpz_class topDividedDifference(std::span<const Polynomial> fs, int n);

}  // namespace schubvan
