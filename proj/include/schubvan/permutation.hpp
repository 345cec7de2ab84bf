#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubvan {

// Nonnegative integer vector indexed 1..n (stored 0-based).
using ExponentVector = std::vector<int>;

// Element of S_n in one-line notation. Positions and values are 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation longest(int n);
  // Accepts "3 2 5 6 1 4 7", "3,2,5,6,1,4,7" or "3256147" (the last only for n <= 9).
  static Permutation parse(std::string_view text);
  // Inverse of code(): the permutation of size max(|c|, i + c_i) whose code is `c`.
  static Permutation fromCode(const ExponentVector& c);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  int length() const;
  ExponentVector code() const;
  Permutation inverse() const;
  Permutation embed(int m) const;

  // Right multiplication by the transposition t_{ij}: swaps positions i and j.
  Permutation swapPositions(int i, int j) const;
  // w * s_i
  Permutation timesSimple(int i) const { return swapPositions(i, i + 1); }
  // w0 * w inside S_size().
  Permutation leftLongest() const;

  bool hasDescent(int i) const;
  bool hasAscent(int i) const { return !hasDescent(i); }
  std::vector<int> descents() const;
  std::vector<int> ascents() const;

  bool isIdentity() const;

  // Contiguous digits when n <= 9, otherwise space separated.
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

// Composition (u*v)(i) = u(v(i)); operands are first embedded into a common S_n.
Permutation operator*(const Permutation& u, const Permutation& v);

// Tableau criterion: for every k, sorted{u(1..k)} <= sorted{v(1..k)} entrywise.
bool bruhatLeq(const Permutation& u, const Permutation& v);

std::vector<Permutation> allPermutations(int n);

int maxSize(std::span<const Permutation> ws);
std::vector<Permutation> embedAll(std::span<const Permutation> ws, int n);

inline int binomial2(int n) { return n * (n - 1) / 2; }

}  // namespace schubvan
