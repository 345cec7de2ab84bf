#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <vector>

#include "schubvan/permutation.hpp"
#include "schubvan/polynomial.hpp"

namespace schubvan {

enum class AscentChoice { First, Last };

// S_w in size() variables, from x^(n-1,...,1,0) by divided differences along a
// chain w -> w s_i (i an ascent) up to w0.
Polynomial schubertPolynomial(const Permutation& w, AscentChoice choice = AscentChoice::First);

// All Schubert polynomials of S_n, built once top-down from w0; read-only after construction.
class SchubertTable {
 public:
  explicit SchubertTable(int n);

  int size() const { return n_; }
  bool covers(const Permutation& w) const;
  // w is embedded into S_n; the result has n variables.
  const Polynomial& operator()(const Permutation& w) const;

 private:
  int n_;
  std::map<Permutation, Polynomial> polys_;
};

// Table lookup when the table covers w, otherwise a chain computation; padded to numVars.
Polynomial schubertFor(const Permutation& w, int numVars, const SchubertTable* table);

struct OracleValue {
  mpz_class value = 0;
  bool degreeMismatch = false;
};

// C_{w1..wk} as the top divided difference of prod S_{wi}, n = max size. The raw
// coefficient of x^(n-1,...,1,0) only bounds it from above. Zero on degree mismatch.
OracleValue intersectionNumber(std::span<const Permutation> ws, const SchubertTable* table = nullptr);

// C^{target}_{factors} = C_{factors, w0 target}.
OracleValue asymmetricCoefficient(std::span<const Permutation> factors, const Permutation& target,
                                  const SchubertTable* table = nullptr);

// f = sum c_w S_w, peeling off the lexicographically smallest monomial x^code(w).
std::map<Permutation, mpz_class> schubertExpansion(const Polynomial& f);

// support(S_w) == lattice points of S_{D(w)}, by scanning the degree-l(w) simplex.
bool verifySNP(const Permutation& w, const SchubertTable* table = nullptr);

// Compositions of `total` into `parts` nonnegative parts, lexicographic.
std::vector<ExponentVector> compositions(int total, int parts);

}  // namespace schubvan
