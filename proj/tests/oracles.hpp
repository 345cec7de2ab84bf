// Test-side reference implementations. Each one works from the textbook
// definition with plain containers and shares no code path with the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schubvan/permutation.hpp"

namespace oracle {

using Word = std::vector<int>;
using Exp = std::vector<int>;
using Poly = std::map<Exp, long long>;

inline Word word(const schubvan::Permutation& w) {
  Word out(w.size());
  for (int i = 1; i <= w.size(); ++i) out[i - 1] = w(i);
  return out;
}

inline schubvan::Permutation perm(const Word& w) { return schubvan::Permutation(w); }

inline int inversions(const Word& w) {
  int n = static_cast<int>(w.size()), c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c += w[i] > w[j];
  return c;
}

inline Word lehmer(const Word& w) {
  Word c(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c[i] += w[j] < w[i];
  return c;
}

inline Word longestTimes(const Word& w) {
  const int n = static_cast<int>(w.size());
  Word out(n);
  for (int i = 0; i < n; ++i) out[i] = n + 1 - w[i];
  return out;
}

inline std::set<std::pair<int, int>> rothe(const Word& w) {
  const int n = static_cast<int>(w.size());
  Word inv(n + 1);
  for (int i = 0; i < n; ++i) inv[w[i]] = i + 1;
  std::set<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (j < w[i - 1] && i < inv[j]) cells.insert({i, j});
  return cells;
}

// Tableau criterion: sorted prefixes compare entrywise.
inline bool bruhatTableau(const Word& u, const Word& v) {
  for (std::size_t k = 1; k <= u.size(); ++k) {
    Word a(u.begin(), u.begin() + k), b(v.begin(), v.begin() + k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < k; ++i)
      if (a[i] > b[i]) return false;
  }
  return true;
}

// Everything reachable from u by length-increasing transposition covers.
inline std::set<Word> bruhatUpSet(const Word& u) {
  std::set<Word> seen{u};
  std::vector<Word> stack{u};
  while (!stack.empty()) {
    Word x = stack.back();
    stack.pop_back();
    const int lx = inversions(x);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        Word y = x;
        std::swap(y[i], y[j]);
        if (inversions(y) == lx + 1 && seen.insert(y).second) stack.push_back(y);
      }
  }
  return seen;
}

inline std::vector<Word> permutations(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Bracket count by repeatedly deleting adjacent "()" pairs from the word with stars removed.
inline int thetaByDeletion(const std::set<std::pair<int, int>>& cells, int rows, int cols, std::uint64_t s) {
  int total = 0;
  for (int c = 1; c <= cols; ++c) {
    std::string w;
    for (int r = 1; r <= rows; ++r) {
      const bool in = (s >> (r - 1)) & 1, cell = cells.count({r, c}) > 0;
      if (cell && in) ++total;
      else if (in) w += '(';
      else if (cell) w += ')';
    }
    for (std::size_t p; (p = w.find("()")) != std::string::npos;) {
      w.erase(p, 2);
      ++total;
    }
  }
  return total;
}

// All fillings with label <= row, strict columns and content alpha; plain exhaustive search.
inline long countTableaux(const std::set<std::pair<int, int>>& cells, const Exp& alpha) {
  std::vector<std::pair<int, int>> list(cells.begin(), cells.end());
  std::map<std::pair<int, int>, int> label;
  Exp used(alpha.size(), 0);
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == list.size()) {
      if (used == alpha) {
        for (auto [cell, l] : label) {
          auto below = label.upper_bound(cell);
          for (; below != label.end(); ++below)
            if (below->first.second == cell.second && below->second <= l) return;
        }
        ++count;
      }
      return;
    }
    const auto [r, c] = list[k];
    for (int l = 1; l <= r && l <= static_cast<int>(alpha.size()); ++l) {
      if (used[l - 1] == alpha[l - 1]) continue;
      ++used[l - 1];
      label[list[k]] = l;
      rec(k + 1);
      label.erase(list[k]);
      --used[l - 1];
    }
  };
  rec(0);
  return count;
}

inline Poly multiply(const Poly& f, const Poly& g) {
  Poly out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) {
      Exp e(std::max(a.size(), b.size()), 0);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

inline Poly pad(const Poly& f, std::size_t n) {
  Poly out;
  for (const auto& [key, c] : f) {
    Exp e = key;
    while (e.size() < n) e.push_back(0);
    while (e.size() > n && e.back() == 0) e.pop_back();
    out[e] += c;
  }
  return out;
}

// (f - s_i f) / (x_i - x_{i+1}) via x_i^a x_{i+1}^b -> sum of the geometric series.
inline Poly divided(const Poly& f, int i) {
  Poly out;
  for (const auto& [e0, c] : f) {
    Exp e = e0;
    while (static_cast<int>(e.size()) < i + 1) e.push_back(0);
    const int a = e[i - 1], b = e[i];
    if (a == b) continue;
    const int lo = std::min(a, b), hi = std::max(a, b);
    const long long sign = a > b ? 1 : -1;
    for (int p = lo; p < hi; ++p) {
      Exp t = e;
      t[i - 1] = p;
      t[i] = lo + hi - 1 - p;
      out[t] += sign * c;
    }
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return pad(out, f.empty() ? 0 : f.begin()->first.size());
}

// S_w from x^(n-1,...,0), descending through the last ascent at each step.
inline Poly schubert(const Word& w) {
  static std::map<Word, Poly> memo;
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  const int n = static_cast<int>(w.size());
  Poly out;
  int asc = 0;
  for (int i = 1; i < n; ++i)
    if (w[i - 1] < w[i]) asc = i;
  if (asc == 0) {
    Exp e(n);
    for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
    out[e] = 1;
  } else {
    Word up = w;
    std::swap(up[asc - 1], up[asc]);
    out = divided(schubert(up), asc);
  }
  out = pad(out, n);
  memo[w] = out;
  return out;
}

inline Word fromLehmer(const Exp& code) {
  // A code with trailing zeros extended so that c_i <= n - i.
  Exp c = code;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < c.size(); ++i) ok = ok && c[i] <= static_cast<int>(c.size() - 1 - i);
    if (ok) break;
    c.push_back(0);
  }
  std::vector<int> avail(c.size());
  std::iota(avail.begin(), avail.end(), 1);
  Word w;
  for (int ci : c) {
    w.push_back(avail[ci]);
    avail.erase(avail.begin() + ci);
  }
  return w;
}

inline Word strip(Word w) {
  while (!w.empty() && w.back() == static_cast<int>(w.size())) w.pop_back();
  if (w.empty()) w.push_back(1);
  return w;
}

// Coefficients in the Schubert basis by peeling the lex-smallest monomial x^code.
inline std::map<Word, long long> expand(Poly f) {
  std::map<Word, long long> out;
  while (!f.empty()) {
    Exp e = f.begin()->first;
    const long long c = f.begin()->second;
    while (!e.empty() && e.back() == 0) e.pop_back();
    const Word w = strip(fromLehmer(e));
    out[w] += c;
    Poly s = schubert(w);
    std::size_t width = f.begin()->first.size();
    for (const auto& t : s) width = std::max(width, t.first.size());
    f = pad(f, width);
    for (const auto& [m, cm] : pad(s, width)) f[m] -= c * cm;
    std::erase_if(f, [](const auto& t) { return t.second == 0; });
  }
  return out;
}

// Intersection number as d_{w0} of the product, applying d_i along a reduced word of w0.
inline long long topDivided(const std::vector<Word>& ws) {
  const int n = static_cast<int>(ws.front().size());
  Poly f;
  f[Exp(n, 0)] = 1;
  for (const auto& w : ws) f = pad(multiply(f, schubert(w)), n);
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) f = divided(f, i);
  long long c = 0;
  for (const auto& [e, v] : f) {
    bool zero = true;
    for (int x : e) zero = zero && x == 0;
    if (zero) c += v;
  }
  return c;
}

// Up-closed subsets of the positive roots (m,q) under (m',q') >= (m,q) iff m' <= m, q' >= q.
inline long countUpperFilters(int n) {
  std::vector<std::pair<int, int>> roots;
  for (int m = 1; m <= n; ++m)
    for (int q = m + 1; q <= n; ++q) roots.push_back({m, q});
  const std::size_t r = roots.size();
  long count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < r && ok; ++a) {
      if (!((mask >> a) & 1)) continue;
      for (std::size_t b = 0; b < r && ok; ++b)
        if (roots[b].first <= roots[a].first && roots[b].second >= roots[a].second) ok = (mask >> b) & 1;
    }
    count += ok;
  }
  return count;
}

// Hand-rolled generators on a fixed-seed engine.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Word permutation(int n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng_);
    return w;
  }

  Word permutationOfLength(int n, int length) {
    for (int tries = 0; tries < 10000; ++tries) {
      Word w = permutation(n);
      if (inversions(w) == length) return w;
    }
    // Fall back to a deterministic word of that length.
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    for (int made = 0; made < length;)
      for (int i = 0; i + 1 < n && made < length; ++i)
        if (w[i] < w[i + 1]) {
          std::swap(w[i], w[i + 1]);
          ++made;
        }
    return w;
  }

  // (u, v, w) in S_n with lengths summing to C(n,2).
  std::vector<Word> wellPosedTriple(int n) {
    const int top = n * (n - 1) / 2;
    while (true) {
      const Word u = permutation(n), v = permutation(n);
      const int rest = top - inversions(u) - inversions(v);
      if (rest < 0 || rest > top) continue;
      return {u, v, permutationOfLength(n, rest)};
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// All well-posed triples in S_n.
inline std::vector<std::vector<Word>> wellPosedTriples(int n) {
  const auto all = permutations(n);
  const int top = n * (n - 1) / 2;
  std::vector<std::vector<Word>> out;
  for (const auto& u : all)
    for (const auto& v : all) {
      const int rest = top - inversions(u) - inversions(v);
      if (rest < 0) continue;
      for (const auto& w : all)
        if (inversions(w) == rest) out.push_back({u, v, w});
    }
  return out;
}

}  // namespace oracle
