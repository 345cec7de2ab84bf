#include "schubvan/rivals.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace schubvan {

namespace {

int totalLength(std::span<const Permutation> ws) {
  int total = 0;
  for (const auto& w : ws) total += w.length();
  return total;
}

std::optional<Verdict> degreeGuard(std::span<const Permutation> ws, const char* method) {
  if (totalLength(ws) == binomial2(maxSize(ws))) return std::nullopt;
  Verdict v;
  v.outcome = Outcome::DegreeMismatch;
  v.method = method;
  v.detail = "sum of lengths differs from C(n,2)";
  return v;
}

std::string tripleStr(const Triple& t) {
  return "(" + t[0].str() + "," + t[1].str() + "," + t[2].str() + ")";
}

}  // namespace

Verdict bruhatVanishingTest(std::span<const Permutation> ws) {
  if (auto g = degreeGuard(ws, "bruhat")) return *g;
  const int n = maxSize(ws);
  const auto e = embedAll(ws, n);
  Verdict v;
  v.method = "bruhat";
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i == j) continue;
      const Permutation flipped = e[j].leftLongest();
      if (!bruhatLeq(e[i], flipped)) {
        v.outcome = Outcome::Vanishes;
        v.certificate = BruhatWitness{static_cast<int>(i + 1), static_cast<int>(j + 1)};
        v.detail = e[i].str() + " not <= " + flipped.str();
        return v;
      }
    }
  v.outcome = Outcome::Inconclusive;
  return v;
}

Triple makeTriple(const Permutation& u, const Permutation& v, const Permutation& w) {
  const int n = std::max({u.size(), v.size(), w.size()});
  Triple t{u.embed(n), v.embed(n), w.embed(n)};
  if (u.length() + v.length() + w.length() != binomial2(n))
    throw std::invalid_argument("triple lengths do not sum to C(n,2)");
  return t;
}

bool dcTrivial(const Triple& t, int* position) {
  const int n = t[0].size();
  for (int i = 1; i < n; ++i)
    if (t[0].hasAscent(i) && t[1].hasAscent(i) && t[2].hasAscent(i)) {
      if (position) *position = i;
      return true;
    }
  return false;
}

std::vector<Triple> dcNeighbors(const Triple& t) {
  const auto& [u, v, w] = t;
  std::vector<Triple> out;
  for (int i = 1; i < u.size(); ++i) {
    const bool ua = u.hasAscent(i), va = v.hasAscent(i), wa = w.hasAscent(i);
    const Permutation us = u.timesSimple(i), vs = v.timesSimple(i), ws = w.timesSimple(i);
    if (ua && va && !wa) {
      out.push_back({us, v, ws});
      out.push_back({u, vs, ws});
    }
    if (!ua && va && wa) {
      out.push_back({us, v, ws});
      out.push_back({us, vs, w});
    }
    if (ua && !va && wa) {
      out.push_back({u, vs, ws});
      out.push_back({us, vs, w});
    }
  }
  return out;
}

std::set<Triple> dcClass(const Triple& t, std::size_t cap) {
  std::set<Triple> seen{t};
  std::deque<Triple> queue{t};
  while (!queue.empty()) {
    const Triple cur = std::move(queue.front());
    queue.pop_front();
    for (auto& nb : dcNeighbors(cur)) {
      if (!seen.insert(nb).second) continue;
      if (seen.size() > cap) throw std::length_error("dc class exceeds the size cap");
      queue.push_back(std::move(nb));
    }
  }
  return seen;
}

Verdict dcTest(std::span<const Permutation> ws, std::size_t cap) {
  if (ws.size() != 3) throw std::invalid_argument("descent cycling needs exactly three factors");
  if (auto g = degreeGuard(ws, "descent_cycling")) return *g;
  const Triple start = makeTriple(ws[0], ws[1], ws[2]);
  Verdict v;
  v.method = "descent_cycling";
  // BFS with parents so the certificate is a shortest move path.
  std::map<Triple, Triple> parent;
  std::deque<Triple> queue{start};
  parent.emplace(start, start);
  while (!queue.empty()) {
    const Triple cur = std::move(queue.front());
    queue.pop_front();
    int pos = 0;
    if (dcTrivial(cur, &pos)) {
      DescentCyclingWitness wit;
      wit.position = pos;
      for (Triple x = cur;; x = parent.at(x)) {
        wit.path.push_back(x);
        if (x == start) break;
      }
      std::reverse(wit.path.begin(), wit.path.end());
      v.outcome = Outcome::Vanishes;
      v.detail = tripleStr(cur) + " ascends at " + std::to_string(pos);
      v.certificate = std::move(wit);
      return v;
    }
    for (auto& nb : dcNeighbors(cur)) {
      if (!parent.emplace(nb, cur).second) continue;
      if (parent.size() > cap) throw std::length_error("dc class exceeds the size cap");
      queue.push_back(std::move(nb));
    }
  }
  v.outcome = Outcome::Inconclusive;
  v.detail = "class size " + std::to_string(parent.size());
  return v;
}

RootGamePosition::RootGamePosition(int n) : n_(n), tokens_(static_cast<std::size_t>(n) * n, 0) {}

int RootGamePosition::total() const {
  int t = 0;
  for (int x : tokens_) t += x;
  return t;
}

RootGamePosition rootGameInitial(std::span<const Permutation> ws) {
  const int n = maxSize(ws);
  RootGamePosition pos(n);
  for (const auto& w0 : ws) {
    const Permutation w = w0.embed(n);
    for (int m = 1; m <= n; ++m)
      for (int q = m + 1; q <= n; ++q)
        if (w(m) > w(q)) pos.add(m, q);
  }
  return pos;
}

std::vector<std::vector<int>> upperFilterProfiles(int n) {
  if (n > kMaxRootGameSize) throw std::domain_error("too many positive roots to enumerate filters");
  std::vector<std::vector<int>> out;
  if (n < 2) {
    out.emplace_back();
    return out;
  }
  std::vector<int> t(n - 1);
  auto rec = [&](auto&& self, int m, int lo) -> void {
    if (m == n) {
      out.push_back(t);
      return;
    }
    for (int v = std::max(lo, m + 1); v <= n + 1; ++v) {
      t[m - 1] = v;
      self(self, m + 1, v);
    }
  };
  rec(rec, 1, 2);
  return out;
}

std::vector<std::pair<int, int>> filterRoots(const std::vector<int>& profile) {
  const int n = static_cast<int>(profile.size()) + 1;
  std::vector<std::pair<int, int>> roots;
  for (int m = 1; m < n; ++m)
    for (int q = profile[m - 1]; q <= n; ++q) roots.emplace_back(m, q);
  return roots;
}

std::optional<DoomedFilter> isDoomed(const RootGamePosition& pos) {
  const int n = pos.size();
  if (n > kMaxRootGameSize) throw std::domain_error("too many positive roots to enumerate filters");
  if (n < 2) return std::nullopt;
  // suffix[m][q]: tokens at alpha_{m,q'} for q' >= q.
  std::vector<std::vector<int>> suffix(n + 1, std::vector<int>(n + 2, 0));
  for (int m = 1; m < n; ++m)
    for (int q = n; q > m; --q) suffix[m][q] = suffix[m][q + 1] + pos.tokens(m, q);
  std::optional<DoomedFilter> found;
  std::vector<int> t(n - 1);
  auto rec = [&](auto&& self, int m, int lo, int tokens, int roots) -> void {
    if (found) return;
    if (m == n) {
      if (tokens > roots) found = DoomedFilter{filterRoots(t), tokens};
      return;
    }
    for (int v = std::max(lo, m + 1); v <= n + 1 && !found; ++v) {
      t[m - 1] = v;
      self(self, m + 1, v, tokens + suffix[m][v], roots + (n + 1 - v));
    }
  };
  rec(rec, 1, 2, 0, 0);
  return found;
}

Verdict rootGameTest(std::span<const Permutation> ws) {
  if (auto g = degreeGuard(ws, "root_game")) return *g;
  Verdict v;
  v.method = "root_game";
  if (auto f = isDoomed(rootGameInitial(ws))) {
    v.outcome = Outcome::Vanishes;
    v.detail = std::to_string(f->tokens) + " tokens on " + std::to_string(f->roots.size()) + " roots";
    v.certificate = std::move(*f);
  } else {
    v.outcome = Outcome::Inconclusive;
  }
  return v;
}

}  // namespace schubvan
