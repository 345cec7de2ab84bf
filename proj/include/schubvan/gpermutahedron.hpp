#pragma once

#include <gmpxx.h>

#include <set>
#include <vector>

#include "schubvan/diagram.hpp"
#include "schubvan/permutation.hpp"

namespace schubvan {

using LatticePoint = std::vector<long>;

// Set function on subsets of {1..n}, stored densely by bitmask (bit i-1 <-> i).
class SubmodularFn {
 public:
  static constexpr int kMaxGround = 20;
  static constexpr int kCheckedGround = 12;

  SubmodularFn() = default;
  // Requires z(empty) = 0. When n <= kCheckedGround submodularity is verified and
  // std::invalid_argument is thrown on failure.
  SubmodularFn(int n, std::vector<mpq_class> values);

  static SubmodularFn zero(int n);
  // z(S) = sum of the |S| largest entries of (0, 1, ..., n-1).
  static SubmodularFn standardPermutahedron(int n);
  // z(S) = theta_D(S) over the rows of D.
  static SubmodularFn fromSchubitope(const Diagram& d);

  int groundSize() const { return n_; }
  const mpq_class& operator()(std::uint32_t subset) const { return values_[subset]; }
  bool integral() const;

  // Local test z(S+i) + z(S+j) >= z(S+i+j) + z(S).
  bool isSubmodular() const;
  // Direct test over all pairs (I, J); exponential, for small n.
  bool isSubmodularPairwise() const;

  SubmodularFn operator+(const SubmodularFn& o) const;

 private:
  int n_ = 0;
  std::vector<mpq_class> values_;
};

// P(z) = { t : sum_{i in I} t_i <= z_I for I != [n], sum_i t_i = z_[n] }.
class GPermutahedron {
 public:
  explicit GPermutahedron(SubmodularFn z) : z_(std::move(z)) {}

  const SubmodularFn& z() const { return z_; }
  int dim() const { return z_.groundSize(); }

  // v_{w_k} = z({w_1..w_k}) - z({w_1..w_{k-1}}).
  std::vector<mpq_class> vertexOf(const Permutation& w) const;
  bool contains(const std::vector<mpq_class>& t) const;
  bool contains(const LatticePoint& t) const;

  // Enumerates the box  z([n]) - z([n]-i) <= t_i <= z({i})  and filters by every
  // defining inequality; exponential in n. Requires integral z.
  std::set<LatticePoint> latticePoints() const;

 private:
  SubmodularFn z_;
};

GPermutahedron minkowskiSum(const GPermutahedron& p, const GPermutahedron& q);

std::set<LatticePoint> minkowskiSum(const std::set<LatticePoint>& a, const std::set<LatticePoint>& b);

// (P cap Z^n) + (Q cap Z^n) == (P + Q) cap Z^n, by enumeration.
bool checkIntegerDecomposition(const GPermutahedron& p, const GPermutahedron& q);

// Points of the set that are vertices of its convex hull (exact LP per point).
std::vector<LatticePoint> convexHullVertices(const std::set<LatticePoint>& points);

}  // namespace schubvan
