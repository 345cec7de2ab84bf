#include "schubvan/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace schubvan {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a permutation word");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, ch) +
                                  "' in permutation");
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  if (tokens.empty()) throw std::invalid_argument("empty permutation");

  std::vector<int> word;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    if (tokens[0].size() > 9)
      throw std::invalid_argument("contiguous digits only allowed for n <= 9");
    for (char ch : tokens[0]) word.push_back(ch - '0');
  } else {
    for (const auto& t : tokens) {
      if (t.size() > 6) throw std::invalid_argument("permutation entry too large");
      word.push_back(std::stoi(t));
    }
  }
  return Permutation(std::move(word));
}

Permutation Permutation::fromCode(const ExponentVector& c) {
  int n = static_cast<int>(c.size());
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (c[i] < 0) throw std::invalid_argument("negative code entry");
    n = std::max(n, i + 1 + c[i]);
  }
  std::vector<int> unused(n);
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> word;
  word.reserve(n);
  for (int i = 0; i < n; ++i) {
    int ci = i < static_cast<int>(c.size()) ? c[i] : 0;
    word.push_back(unused[ci]);
    unused.erase(unused.begin() + ci);
  }
  return Permutation(std::move(word));
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (word_[i] > word_[j]) ++inv;
  return inv;
}

ExponentVector Permutation::code() const {
  ExponentVector c(size(), 0);
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (word_[j] < word_[i]) ++c[i];
  return c;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(size());
  for (int i = 0; i < size(); ++i) inv[word_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::embed(int m) const {
  if (m < size()) throw std::invalid_argument("cannot embed into a smaller symmetric group");
  std::vector<int> w = word_;
  for (int v = size() + 1; v <= m; ++v) w.push_back(v);
  return Permutation(std::move(w));
}

Permutation Permutation::swapPositions(int i, int j) const {
  if (i < 1 || j < 1 || i > size() || j > size())
    throw std::out_of_range("transposition index out of range");
  std::vector<int> w = word_;
  std::swap(w[i - 1], w[j - 1]);
  return Permutation(std::move(w));
}

Permutation Permutation::leftLongest() const {
  std::vector<int> w(size());
  for (int i = 0; i < size(); ++i) w[i] = size() + 1 - word_[i];
  return Permutation(std::move(w));
}

bool Permutation::hasDescent(int i) const {
  if (i < 1) throw std::out_of_range("descent position out of range");
  // Positions at or beyond the last letter are ascents of the stable embedding.
  if (i >= size()) return false;
  return word_[i - 1] > word_[i];
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i)
    if (word_[i - 1] > word_[i]) d.push_back(i);
  return d;
}

std::vector<int> Permutation::ascents() const {
  std::vector<int> a;
  for (int i = 1; i < size(); ++i)
    if (word_[i - 1] < word_[i]) a.push_back(i);
  return a;
}

bool Permutation::isIdentity() const {
  for (int i = 0; i < size(); ++i)
    if (word_[i] != i + 1) return false;
  return true;
}

std::string Permutation::str() const {
  std::string s;
  if (size() <= 9) {
    for (int v : word_) s.push_back(static_cast<char>('0' + v));
    return s;
  }
  for (int i = 0; i < size(); ++i) {
    if (i) s.push_back(' ');
    s += std::to_string(word_[i]);
  }
  return s;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  const int n = std::max(u.size(), v.size());
  Permutation a = u.embed(n), b = v.embed(n);
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = a(b(i));
  return Permutation(std::move(w));
}

bool bruhatLeq(const Permutation& u, const Permutation& v) {
  const int n = std::max(u.size(), v.size());
  Permutation a = u.embed(n), b = v.embed(n);
  std::vector<int> pa, pb;
  for (int k = 1; k <= n; ++k) {
    pa.insert(std::upper_bound(pa.begin(), pa.end(), a(k)), a(k));
    pb.insert(std::upper_bound(pb.begin(), pb.end(), b(k)), b(k));
    for (int t = 0; t < k; ++t)
      if (pa[t] > pb[t]) return false;
  }
  return true;
}

std::vector<Permutation> allPermutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

int maxSize(std::span<const Permutation> ws) {
  int n = 0;
  for (const auto& w : ws) n = std::max(n, w.size());
  return n;
}

std::vector<Permutation> embedAll(std::span<const Permutation> ws, int n) {
  std::vector<Permutation> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(w.embed(n));
  return out;
}

}  // namespace schubvan
