#include "schubvan/vanishing.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "schubvan/kernels.hpp"

namespace schubvan {

SchubertProblem SchubertProblem::symmetric(std::vector<Permutation> factors) {
  return SchubertProblem{std::move(factors), std::nullopt};
}

SchubertProblem SchubertProblem::asymmetric(std::vector<Permutation> factors, Permutation target) {
  return SchubertProblem{std::move(factors), std::move(target)};
}

int SchubertProblem::n() const {
  int n = maxSize(factors);
  if (target) n = std::max(n, target->size());
  return n;
}

bool SchubertProblem::wellPosed() const {
  int total = 0;
  for (const auto& w : factors) total += w.length();
  return total == (target ? target->length() : binomial2(n()));
}

std::vector<Permutation> SchubertProblem::embeddedFactors() const { return embedAll(factors, n()); }

std::vector<Permutation> SchubertProblem::symmetricFactors() const {
  auto out = embeddedFactors();
  if (target) out.push_back(target->embed(n()).leftLongest());
  return out;
}

ExponentVector staircase(int n) {
  ExponentVector a(n);
  for (int i = 0; i < n; ++i) a[i] = n - 1 - i;
  return a;
}

namespace {

std::string subsetStr(RowSet s) {
  std::string out = "{";
  for (int r : rowSetToList(s)) out += (out.size() > 1 ? "," : "") + std::to_string(r);
  return out + "}";
}

Diagram buildDiagram(const std::vector<Permutation>& ws, bool compress) {
  Diagram d = concatRothe(ws);
  return compress ? d.compressed() : d;
}

Verdict mismatch(const char* method, const char* why) {
  Verdict v;
  v.outcome = Outcome::DegreeMismatch;
  v.method = method;
  v.detail = why;
  return v;
}

}  // namespace

Certificate vanishingCertificate(const Diagram& d, const ExponentVector& alpha) {
  if (d.rows() <= kMaxSubsetScanRows)
    if (auto s = kernels::firstViolation(d, alpha, kernels::Exec::Serial)) return *s;
  FeasibilityCertificate c = lpFeasible(d, alpha);
  if (auto* f = std::get_if<FarkasCertificate>(&c)) return *f;
  throw std::logic_error("vanishing certificate requested for a feasible instance");
}

Verdict schubitopeVerdict(const Diagram& d, const ExponentVector& alpha, const char* method,
                          bool compressed) {
  Verdict v;
  v.method = method;
  v.content = alpha;
  v.compressed = compressed;
  FeasibilityCertificate c = lpFeasible(d, alpha);
  if (auto* p = std::get_if<RelaxationPoint>(&c)) {
    v.outcome = Outcome::Inconclusive;
    v.certificate = std::move(*p);
    return v;
  }
  v.outcome = Outcome::Vanishes;
  Certificate cert = vanishingCertificate(d, alpha);
  if (auto* s = std::get_if<InfeasibleSubset>(&cert))
    v.detail = "S=" + subsetStr(s->subset) + " " + std::to_string(s->lhs) + ">" + std::to_string(s->rhs);
  else
    v.detail = "farkas";
  v.certificate = std::move(cert);
  return v;
}

Verdict symmetricTest(const SchubertProblem& p, const TestOptions& opt) {
  const auto ws = p.symmetricFactors();
  const int n = p.n();
  int total = 0;
  for (const auto& w : ws) total += w.length();
  if (total != binomial2(n)) return mismatch("schubitope_symmetric", "sum of lengths differs from C(n,2)");
  return schubitopeVerdict(buildDiagram(ws, opt.compress), staircase(n), "schubitope_symmetric",
                           opt.compress);
}

Verdict asymmetricTest(const SchubertProblem& p, const TestOptions& opt) {
  if (!p.target) throw std::invalid_argument("asymmetric test needs a target");
  if (!p.wellPosed()) return mismatch("schubitope_asymmetric", "sum of lengths differs from l(target)");
  return schubitopeVerdict(buildDiagram(p.embeddedFactors(), opt.compress), p.target->embed(p.n()).code(),
                           "schubitope_asymmetric", opt.compress);
}

Verdict flexibleTest(const SchubertProblem& p, const ExponentVector& alpha, const TestOptions& opt) {
  if (!p.target) throw std::invalid_argument("flexible test needs a target");
  if (!p.wellPosed()) return mismatch("flexible", "sum of lengths differs from l(target)");
  const Permutation target = p.target->embed(p.n());
  if (static_cast<int>(alpha.size()) != target.size() ||
      !schubitopeMembership(Diagram::rothe(target), alpha).member)
    throw std::invalid_argument("content vector is not a lattice point of the target's Schubitope");
  return schubitopeVerdict(buildDiagram(p.embeddedFactors(), opt.compress), alpha, "flexible", opt.compress);
}

ExponentVector sampleSchubitopePoint(const Permutation& w, std::optional<std::uint64_t> seed) {
  const Diagram d = Diagram::rothe(w);
  ExponentVector alpha(w.size(), 0);
  std::mt19937_64 rng(seed.value_or(0));
  for (int c = 1; c <= d.cols(); ++c) {
    int prev = 0;
    for (int r : d.columnRows(c)) {
      // prev < r holds since prev is at most the previous (smaller) row.
      int x = prev + 1;
      if (seed) x += static_cast<int>(rng() % static_cast<std::uint64_t>(r - prev));
      ++alpha[x - 1];
      prev = x;
    }
  }
  return alpha;
}

Verdict randomizedFlexibleTest(const SchubertProblem& p, int samples, std::uint64_t seed,
                               const TestOptions& opt) {
  if (!p.target) throw std::invalid_argument("flexible test needs a target");
  if (!p.wellPosed()) return mismatch("flexible", "sum of lengths differs from l(target)");
  const Permutation target = p.target->embed(p.n());
  std::set<ExponentVector> tried;
  Verdict last;
  for (int k = 0; k < samples; ++k) {
    ExponentVector alpha = sampleSchubitopePoint(target, seed + static_cast<std::uint64_t>(k));
    if (!tried.insert(alpha).second) continue;
    last = flexibleTest(p, alpha, opt);
    if (last.outcome == Outcome::Vanishes) break;
  }
  if (tried.empty()) return flexibleTest(p, target.code(), opt);
  last.detail += (last.detail.empty() ? "" : " ") + std::to_string(tried.size()) + " distinct samples";
  return last;
}

StrengthReport strengthComparison(const SchubertProblem& p, const TestOptions& opt) {
  if (!p.target) throw std::invalid_argument("strength comparison needs a target");
  StrengthReport r;
  r.symmetric = symmetricTest(p, opt);
  r.asymmetric = asymmetricTest(p, opt);
  r.implicationHolds =
      r.symmetric.outcome != Outcome::Vanishes || r.asymmetric.outcome == Outcome::Vanishes;
  return r;
}

namespace {

bool inSchubitope(const Diagram& d, const ExponentVector& alpha) {
  long total = 0;
  for (int a : alpha) total += a;
  if (total != d.size()) return false;
  const RowSet full = allRows(d.rows());
  for (RowSet s = 1; s < full; ++s) {
    long lhs = 0;
    for (int r = 1; r <= d.rows(); ++r)
      if (inRowSet(s, r)) lhs += alpha[r - 1];
    if (lhs > check::theta(d, s)) return false;
  }
  return true;
}

ExponentVector directCode(const Permutation& w) {
  ExponentVector c(w.size(), 0);
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j) c[i - 1] += w(j) < w(i);
  return c;
}

}  // namespace

bool revalidate(const SchubertProblem& p, const Verdict& v) {
  if (!v.certificate) return v.outcome != Outcome::Vanishes;
  const Certificate& c = *v.certificate;
  if (auto* b = std::get_if<BruhatWitness>(&c)) return check::bruhatWitness(p.symmetricFactors(), *b);
  if (auto* dc = std::get_if<DescentCyclingWitness>(&c))
    return check::descentCyclingWitness(p.symmetricFactors(), *dc);
  if (auto* f = std::get_if<DoomedFilter>(&c)) return check::doomedFilter(p.symmetricFactors(), *f);

  const int n = p.n();
  if (v.method == "schubitope_symmetric") {
    if (v.content != staircase(n)) return false;
    return check::schubitopeCertificate(check::concatenated(p.symmetricFactors(), v.compressed), v.content, c);
  }
  if (!p.target) return false;
  const Permutation target = p.target->embed(n);
  if (v.method == "schubitope_asymmetric" && v.content != directCode(target)) return false;
  if (v.method == "flexible" &&
      (n > kMaxSubsetScanRows || !inSchubitope(check::concatenated(std::vector{target}, false), v.content)))
    return false;
  if (v.method != "schubitope_asymmetric" && v.method != "flexible") return false;
  return check::schubitopeCertificate(check::concatenated(p.embeddedFactors(), v.compressed), v.content, c);
}

}  // namespace schubvan
