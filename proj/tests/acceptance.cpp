// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "schubvan/batch.hpp"
#include "schubvan/kernels.hpp"
#include "schubvan/rivals.hpp"
#include "schubvan/schubert.hpp"
#include "schubvan/schubitope.hpp"
#include "schubvan/vanishing.hpp"

using namespace schubvan;

namespace {

// Pinned limits.
constexpr int kRandomS5Triples = 500;
constexpr std::uint64_t kSweepSeed = 20240611;
constexpr double kExampleSeconds = 1.0;
constexpr double kSweepSeconds = 300.0;
constexpr double kSnpSeconds = 600.0;

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<Permutation> Ps(std::initializer_list<const char*> ws) {
  std::vector<Permutation> out;
  for (const char* w : ws) out.push_back(P(w));
  return out;
}

bool vanishes(const Verdict& v) { return v.outcome == Outcome::Vanishes; }
bool inconclusive(const Verdict& v) { return v.outcome == Outcome::Inconclusive; }

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << '\n';
  failures += !ok;
}

// Every Vanishes verdict seen anywhere, with its revalidation result.
long emitted = 0;
long revalidated = 0;

void record(const SchubertProblem& p, const Verdict& v) {
  if (!vanishes(v)) return;
  ++emitted;
  revalidated += v.certificate && revalidate(p, v);
}

void criterion1() {
  const auto ws = Ps({"3256147", "2143657", "4632175"});
  const auto p = SchubertProblem::symmetric(ws);
  const auto t0 = std::chrono::steady_clock::now();
  const Verdict v = symmetricTest(p);
  const double dt = seconds(t0);
  record(p, v);
  const bool okTest = vanishes(v) && v.certificate && revalidate(p, v);
  const auto c = intersectionNumber(ws);
  std::ostringstream msg;
  msg << "symmetric test " << outcomeName(v.outcome) << " in " << dt << " s, certificate "
      << (v.certificate ? certificateKind(*v.certificate) : "none") << ", oracle C = " << c.value.get_str();
  report(1, okTest && dt < kExampleSeconds && c.value == 0 && !c.degreeMismatch, msg.str());
}

void criterion2() {
  const Permutation w = P("21543");
  const Diagram d = Diagram::rothe(w);
  const auto support = schubertPolynomial(w).support();
  const auto byInequalities = kernels::schubitopeLatticePoints(d, kernels::Exec::Parallel);
  std::set<ExponentVector> byLp, byTab;
  for (const auto& alpha : compositions(w.length(), 5)) {
    if (isFeasible(lpFeasible(d, alpha))) byLp.insert(alpha);
    if (!enumerateTab(d, alpha).empty()) byTab.insert(alpha);
  }
  const std::vector<std::pair<std::vector<int>, int>> printed = {
      {{1}, 3}, {{2}, 2}, {{3}, 2}, {{4}, 1}, {{1, 2, 3}, 4}, {{1, 2, 4}, 4}, {{1, 3, 4}, 4}, {{2, 3, 4}, 3}};
  bool thetaOk = theta(d, allRows(5)) == 4;
  for (const auto& [rows, bound] : printed) thetaOk = thetaOk && theta(d, rowSetFromList(rows)) == bound;
  const bool ok = support.size() == 13 && std::set<ExponentVector>(byInequalities.begin(), byInequalities.end()) == support &&
                  byLp == support && byTab == support && thetaOk;
  std::ostringstream msg;
  msg << "support " << support.size() << ", inequalities " << byInequalities.size() << ", LP " << byLp.size()
      << ", tableaux " << byTab.size() << ", theta bounds " << (thetaOk ? "match" : "differ");
  report(2, ok, msg.str());
}

void criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  long triples = 0, verdictsVanish = 0, violations = 0;
  auto sweep = [&](const std::vector<oracle::Word>& t) {
    ++triples;
    const std::vector<Permutation> ws{oracle::perm(t[0]), oracle::perm(t[1]), oracle::perm(t[2])};
    const long long c = oracle::topDivided(t);
    const auto sym = SchubertProblem::symmetric(ws);
    const auto asym = SchubertProblem::asymmetric({ws[0], ws[1]}, ws[2].leftLongest());
    const std::vector<std::pair<const SchubertProblem*, Verdict>> vs = {
        {&sym, symmetricTest(sym)},        {&asym, asymmetricTest(asym)}, {&sym, bruhatVanishingTest(ws)},
        {&sym, dcTest(ws)},                {&sym, rootGameTest(ws)}};
    for (const auto& [p, v] : vs) {
      record(*p, v);
      if (!vanishes(v)) continue;
      ++verdictsVanish;
      violations += c != 0;
    }
  };
  for (const auto& t : oracle::wellPosedTriples(4)) sweep(t);
  oracle::Gen gen(kSweepSeed);
  for (int k = 0; k < kRandomS5Triples; ++k) sweep(gen.wellPosedTriple(5));
  const double dt = seconds(t0);
  std::ostringstream msg;
  msg << triples << " triples, " << verdictsVanish << " vanishing verdicts, " << violations << " violations, " << dt
      << " s";
  report(3, violations == 0 && verdictsVanish > 0 && dt < kSweepSeconds, msg.str());
}

void criterion4() {
  long cases = 0, violations = 0;
  for (const auto& w : allPermutations(4)) {
    const Diagram d = Diagram::rothe(w);
    for (const auto& alpha : compositions(w.length(), 4)) {
      ++cases;
      const bool tab = !enumerateTab(d, alpha).empty();
      const bool ineq = schubitopeMembership(d, alpha).member;
      const bool lp = isFeasible(lpFeasible(d, alpha));
      violations += !(tab == ineq && ineq == lp);
    }
  }
  report(4, violations == 0, std::to_string(cases) + " (w, alpha) cases, " + std::to_string(violations) + " violations");
}

void criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  const SchubertTable table(5);
  int snp = 0;
  const auto s5 = allPermutations(5);
  for (const auto& w : s5) snp += verifySNP(w, &table);

  // Support of S_u S_v against the lattice points of S_{D(u,v)}, all ordered S_5 pairs.
  std::vector<std::pair<Permutation, Permutation>> pairs;
  for (const auto& u : s5)
    for (const auto& v : s5) pairs.emplace_back(u, v);
  std::vector<char> ok(pairs.size(), 0);
  kernels::parallelFor(pairs.size(), kernels::Exec::Parallel, [&](std::size_t i) {
    const auto& [u, v] = pairs[i];
    const std::vector<Permutation> uv{u, v};
    const auto pts = kernels::schubitopeLatticePoints(concatRothe(uv), kernels::Exec::Serial);
    ok[i] = std::set<ExponentVector>(pts.begin(), pts.end()) == (table(u) * table(v)).support();
  });
  long pairOk = 0;
  for (char c : ok) pairOk += c;

  // Coefficient nonzero iff membership, every alpha, all ordered S_4 pairs.
  long s4Bad = 0;
  const auto s4 = allPermutations(4);
  for (const auto& u : s4)
    for (const auto& v : s4) {
      const Polynomial f = schubertPolynomial(u) * schubertPolynomial(v);
      const std::vector<Permutation> uv{u, v};
      const Diagram d = concatRothe(uv);
      for (const auto& alpha : compositions(d.size(), 4))
        s4Bad += (f.coefficient(alpha) != 0) != schubitopeMembership(d, alpha).member;
    }
  const double dt = seconds(t0);
  std::ostringstream msg;
  msg << "SNP " << snp << "/120, S_5 product supports " << pairOk << "/" << pairs.size() << ", S_4 coefficient mismatches "
      << s4Bad << ", " << dt << " s";
  report(5, snp == 120 && pairOk == static_cast<long>(pairs.size()) && s4Bad == 0 && dt < kSnpSeconds, msg.str());
}

void criterion6() {
  const auto all = allPermutations(4);
  long problems = 0, violations = 0, strict = 0;
  for (const auto& u : all)
    for (const auto& v : all)
      for (const auto& w : all) {
        if (u.length() + v.length() != w.length()) continue;
        ++problems;
        const auto r = strengthComparison(SchubertProblem::asymmetric({u, v}, w));
        violations += vanishes(r.symmetric) && !vanishes(r.asymmetric);
        strict += vanishes(r.asymmetric) && !vanishes(r.symmetric);
      }
  const auto witness = strengthComparison(SchubertProblem::asymmetric(Ps({"4123", "1342"}), P("4312")));
  const bool witnessOk = vanishes(witness.asymmetric) && inconclusive(witness.symmetric);
  std::ostringstream msg;
  msg << problems << " problems, " << violations << " violations, " << strict << " strict, witness "
      << (witnessOk ? "ok" : "wrong");
  report(6, violations == 0 && witnessOk, msg.str());
}

void criterion7() {
  auto schub = [](std::initializer_list<const char*> ws) { return symmetricTest(SchubertProblem::symmetric(Ps(ws))); };
  std::vector<std::string> wrong;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) wrong.emplace_back(what);
  };
  expect(vanishes(bruhatVanishingTest(Ps({"1243", "1342", "3142"}))), "1243 bruhat");
  expect(inconclusive(schub({"1243", "1342", "3142"})), "1243 schubitope");
  expect(vanishes(schub({"1423", "1423", "1423"})), "1423^3 schubitope");
  expect(inconclusive(bruhatVanishingTest(Ps({"1423", "1423", "1423"}))), "1423^3 bruhat");
  expect(vanishes(dcTest(Ps({"1423", "1423", "1342"}))), "1342 dc");
  expect(isDoomed(rootGameInitial(Ps({"1423", "1423", "1342"}))).has_value(), "1342 root game");
  expect(inconclusive(schub({"1423", "1423", "1342"})), "1342 schubitope");
  expect(vanishes(schub({"3216547", "3216547", "4261573"})), "4261573 schubitope");
  const Verdict dcA = dcTest(Ps({"3216547", "3216547", "4261573"}));
  expect(inconclusive(dcA) && dcClass(makeTriple(P("3216547"), P("3216547"), P("4261573"))).size() == 9,
         "4261573 dc class of 9");
  expect(vanishes(asymmetricTest(SchubertProblem::asymmetric(Ps({"3216547", "3216547"}), P("7236415")))),
         "7236415 asymmetric");
  expect(!isDoomed(rootGameInitial(Ps({"3216547", "3216547", "1652473"}))), "1652473 root game");
  expect(inconclusive(dcTest(Ps({"3216547", "3216547", "1652473"}))), "1652473 dc");
  const auto p = SchubertProblem::asymmetric(Ps({"231645", "231645"}), P("451623"));
  const auto monomials = schubertPolynomial(P("451623")).support();
  expect(monomials.size() == 3, "three monomials");
  for (const auto& alpha : monomials) expect(inconclusive(flexibleTest(p, alpha)), "451623 monomial");
  std::string msg = "12 matrix entries and 3 monomials checked";
  for (const auto& w : wrong) msg += "; wrong: " + w;
  report(7, wrong.empty(), msg);
}

void criterion8() {
  long bad = 0, cases = 0;
  for (const auto& w : allPermutations(7)) {
    ++cases;
    const auto a = w.code(), b = w.leftLongest().code();
    for (int i = 0; i < 7; ++i) bad += a[i] + b[i] != 6 - i;
  }
  report(8, bad == 0 && cases == 5040, std::to_string(cases) + " permutations, " + std::to_string(bad) + " bad entries");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

batch::Options goldenOptions() {
  batch::Options o;
  o.tests = batch::parseTestList("all");
  o.flexibleSamples = 8;
  o.seed = 3;
  o.stable = true;
  o.format = batch::Format::JsonLines;
  return o;
}

std::string runGolden(const batch::Options& opt, int* rc) {
  std::istringstream in(slurp(std::string(SCHUBVAN_TEST_DATA) + "/golden.txt"));
  std::ostringstream out, err;
  *rc = batch::runBatch(in, out, err, opt);
  return out.str();
}

void criterion9() {
  // Golden batch certificates, replayed from their JSON form.
  int rc = 0;
  std::istringstream lines(runGolden(goldenOptions(), &rc));
  for (std::string line; std::getline(lines, line);) {
    const auto r = batch::resultFromJson(batch::Json::parse(line));
    if (!r.problem) continue;
    const auto p = batch::toProblem(*r.problem);
    for (const auto& [name, tv] : r.verdicts) {
      if (tv.status != "VANISHES") continue;
      Verdict v;
      v.outcome = Outcome::Vanishes;
      v.method = name;
      v.certificate = tv.certificate;
      v.content = tv.content;
      v.compressed = tv.compressed;
      record(p, v);
    }
  }
  report(9, emitted > 0 && revalidated == emitted && rc == 0,
         std::to_string(revalidated) + "/" + std::to_string(emitted) + " vanishing certificates revalidate");
}

void criterion10() {
  int rc1 = 0, rc2 = 0, rc3 = 0;
  const auto opt = goldenOptions();
  const std::string a = runGolden(opt, &rc1), b = runGolden(opt, &rc2);
  auto serial = opt;
  serial.threads = 1;
  const std::string c = runGolden(serial, &rc3);
  const bool ok = rc1 == 0 && rc2 == 0 && rc3 == 0 && !a.empty() && a == b && a == c;
  report(10, ok, std::to_string(a.size()) + " bytes, " + (ok ? "identical" : "different") + " across runs");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << 10 - failures << "/10\n";
  return failures ? 1 : 0;
}
