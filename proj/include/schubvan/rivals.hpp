#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "schubvan/certificate.hpp"
#include "schubvan/permutation.hpp"

namespace schubvan {

// Vanishes iff some ordered pair i != j has w^(i) not <= w0 w^(j); pairs scanned lexicographically.
Verdict bruhatVanishingTest(std::span<const Permutation> ws);

// Embeds into a common S_n; throws unless l(u)+l(v)+l(w) = C(n,2).
Triple makeTriple(const Permutation& u, const Permutation& v, const Permutation& w);

// Some i is an ascent of all three. Stores the smallest such i in *position.
bool dcTrivial(const Triple& t, int* position = nullptr);
// Neighbours under one application of dc.1, dc.2 or dc.3.
std::vector<Triple> dcNeighbors(const Triple& t);

inline constexpr std::size_t kDefaultDcCap = 1'000'000;

// Equivalence class under dc moves; throws std::length_error past `cap` members.
std::set<Triple> dcClass(const Triple& t, std::size_t cap = kDefaultDcCap);

// Vanishes iff the class has a dc-trivial member; the certificate is a move path to it.
// Requires exactly three factors.
Verdict dcTest(std::span<const Permutation> ws, std::size_t cap = kDefaultDcCap);

// Token counts on the positive roots alpha_{m,q}, m < q <= n.
class RootGamePosition {
 public:
  explicit RootGamePosition(int n = 0);

  int size() const { return n_; }
  int tokens(int m, int q) const { return tokens_[index(m, q)]; }
  void add(int m, int q, int count = 1) { tokens_[index(m, q)] += count; }
  int total() const;

 private:
  int index(int m, int q) const { return (m - 1) * n_ + (q - 1); }
  int n_;
  std::vector<int> tokens_;
};

// One token at alpha_{m,q} for each factor with w(m) > w(q).
RootGamePosition rootGameInitial(std::span<const Permutation> ws);

inline constexpr int kMaxRootGameSize = 12;

// Upper order filters as threshold profiles t_1 <= ... <= t_{n-1}, t_m in [m+1, n+1]:
// row m holds alpha_{m,q} for q >= t_m. Throws std::domain_error above kMaxRootGameSize.
std::vector<std::vector<int>> upperFilterProfiles(int n);
std::vector<std::pair<int, int>> filterRoots(const std::vector<int>& profile);

// First filter (profile order) holding more tokens than roots, or nullopt.
std::optional<DoomedFilter> isDoomed(const RootGamePosition& pos);

Verdict rootGameTest(std::span<const Permutation> ws);

}  // namespace schubvan
