#include "schubvan/worked_examples.hpp"

#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include "schubvan/kernels.hpp"
#include "schubvan/rivals.hpp"
#include "schubvan/schubert.hpp"
#include "schubvan/schubitope.hpp"
#include "schubvan/vanishing.hpp"

namespace schubvan {

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<Permutation> Ps(std::initializer_list<const char*> ws) {
  std::vector<Permutation> out;
  for (const char* w : ws) out.push_back(P(w));
  return out;
}

// Collects failed expectations for one check.
class Expect {
 public:
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures_ += (failures_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_.empty(); }
  const std::string& failures() const { return failures_; }

 private:
  std::string failures_;
};

bool vanishes(const Verdict& v) { return v.outcome == Outcome::Vanishes; }
bool inconclusive(const Verdict& v) { return v.outcome == Outcome::Inconclusive; }

void exampleOneTwo(Expect& expect) {
  const auto p = SchubertProblem::symmetric(Ps({"3256147", "2143657", "4632175"}));
  const Verdict v = symmetricTest(p);
  expect(vanishes(v), "symmetric test does not vanish");
  expect(revalidate(p, v), "certificate does not revalidate");
  const Diagram d = concatRothe(p.factors);
  expect(d.size() == 21 && d.cols() == 21, "concatenated diagram is not 21 cells in 7x21");
  expect(enumerateTab(d, staircase(7), 1).empty(), "tableau set is not empty");
  expect(!dcTrivial(makeTriple(p.factors[0], p.factors[1], p.factors[2])), "triple is dc trivial");
}

void figureOne(Expect& expect) {
  const Permutation w = P("21543");
  const Polynomial s = schubertPolynomial(w);
  const Polynomial listed = Polynomial::parse(
      "x1^3x2 + x1^3x3 + x1^3x4 + x1^2x2^2 + x1^2x3^2 + 2x1^2x2x3 + x1^2x2x4 + x1^2x3x4"
      " + x1x2x3^2 + x1x2^2x3 + x1x2^2x4 + x1x3^2x4 + x1x2x3x4",
      5);
  expect(s == listed, "Schubert polynomial differs from the listed 13 terms");
  const Diagram d = Diagram::rothe(w);
  const auto pts = kernels::schubitopeLatticePoints(d, kernels::Exec::Serial);
  expect(pts.size() == 13, "lattice point count is not 13");
  expect(std::set<ExponentVector>(pts.begin(), pts.end()) == s.support(), "lattice points differ from support");
  const std::vector<std::pair<std::vector<int>, int>> printed = {
      {{1}, 3}, {{2}, 2}, {{3}, 2}, {{4}, 1}, {{1, 2, 3}, 4}, {{1, 2, 4}, 4}, {{1, 3, 4}, 4}, {{2, 3, 4}, 3}};
  for (const auto& [rows, bound] : printed)
    expect(theta(d, rowSetFromList(rows)) == bound, "theta differs from a printed bound");
  expect(theta(d, rowSetFromList({1, 2, 3, 4})) == 4, "total is not 4");
  std::set<std::pair<std::vector<int>, int>> facets;
  for (const auto& f : facetInequalities(d, pts)) facets.insert({rowSetToList(f.subset), f.bound});
  expect(facets == std::set<std::pair<std::vector<int>, int>>(printed.begin(), printed.end()),
         "facet inequalities differ from the printed eight");
  expect(verifySNP(w), "SNP fails");
}

void strictness(Expect& expect) {
  const auto p = SchubertProblem::asymmetric(Ps({"4123", "1342"}), P("4312"));
  const Polynomial prod = schubertPolynomial(P("4123")) * schubertPolynomial(P("1342"));
  expect(prod == Polynomial::parse("x1^4x3 + x1^4x2 + x1^3x2x3", 4), "product differs");
  const auto r = strengthComparison(p);
  expect(vanishes(r.asymmetric), "asymmetric test does not vanish");
  expect(inconclusive(r.symmetric), "symmetric test is not inconclusive");
  expect(revalidate(p, r.asymmetric), "certificate does not revalidate");
  expect(asymmetricCoefficient(p.factors, *p.target).value == 0, "oracle is nonzero");
}

void exampleFourNine(Expect& expect) {
  const auto p = SchubertProblem::asymmetric(Ps({"231645", "231645"}), P("451623"));
  const Polynomial s = schubertPolynomial(P("451623"));
  expect(s == Polynomial::parse("x1^3x2^3x4^2 + x1^3x2^3x3x4 + x1^3x2^3x3^2", 6), "Schubert polynomial differs");
  expect(P("451623").code() == ExponentVector{3, 3, 0, 2, 0, 0}, "code differs");
  expect(inconclusive(asymmetricTest(p)), "asymmetric test is not inconclusive");
  for (const auto& alpha : s.support())
    expect(inconclusive(flexibleTest(p, alpha)), "a monomial choice is not inconclusive");
  expect(asymmetricCoefficient(p.factors, *p.target).value == 0, "oracle is nonzero");
  const Triple t = makeTriple(P("231645"), P("231645"), P("451623").leftLongest());
  bool anyTrivial = false;
  for (const auto& m : dcClass(t)) anyTrivial = anyTrivial || dcTrivial(m);
  expect(!anyTrivial, "dc class has a dc trivial member");
}

void bruhatExample(Expect& expect) {
  const auto ws = Ps({"1243", "1342", "3142"});
  const Verdict b = bruhatVanishingTest(ws);
  expect(vanishes(b), "Bruhat test does not vanish");
  expect(P("3142").leftLongest() == P("2413"), "w0 w differs from 2413");
  expect(!bruhatLeq(P("1342"), P("2413")), "1342 <= 2413");
  expect(inconclusive(symmetricTest(SchubertProblem::symmetric(ws))), "symmetric test is not inconclusive");
  expect(inconclusive(asymmetricTest(SchubertProblem::asymmetric(Ps({"1243", "1342"}), P("2413")))),
         "asymmetric test is not inconclusive");
  expect(inconclusive(asymmetricTest(SchubertProblem::asymmetric(Ps({"1342", "3142"}), P("4312")))),
         "asymmetric test (v,w -> w0 u) is not inconclusive");
  expect(inconclusive(asymmetricTest(SchubertProblem::asymmetric(Ps({"1243", "3142"}), P("4213")))),
         "asymmetric test (u,w -> w0 v) is not inconclusive");
}

void cubeExample(Expect& expect) {
  const auto ws = Ps({"1423", "1423", "1423"});
  const Polynomial s = schubertPolynomial(P("1423"));
  const Polynomial cube = s * s * s;
  expect(cube == Polynomial::parse("x2^6 + 3x1x2^5 + 6x1^2x2^4 + 7x1^3x2^3 + 6x1^4x2^2 + 3x1^5x2 + x1^6", 4),
         "cube differs");
  expect(cube.coefficient({3, 2, 1, 0}) == 0, "cube contains x1^3x2^2x3");
  expect(vanishes(symmetricTest(SchubertProblem::symmetric(ws))), "symmetric test does not vanish");
  expect(inconclusive(bruhatVanishingTest(ws)), "Bruhat test is not inconclusive");
}

void dcTrivialExample(Expect& expect) {
  const auto ws = Ps({"1423", "1423", "1342"});
  expect(dcTrivial(makeTriple(ws[0], ws[1], ws[2])), "triple is not dc trivial");
  expect(vanishes(dcTest(ws)), "dc test does not vanish");
  expect(vanishes(rootGameTest(ws)), "root game is not doomed");
  expect(inconclusive(symmetricTest(SchubertProblem::symmetric(ws))), "symmetric test is not inconclusive");
  expect(inconclusive(asymmetricTest(SchubertProblem::asymmetric(Ps({"1423", "1423"}), P("4213")))),
         "asymmetric test is not inconclusive");
  const Polynomial s = schubertPolynomial(P("1423"));
  expect(s * s == Polynomial::parse("x2^4 + 2x1x2^3 + 3x1^2x2^2 + 2x1^3x2 + x1^4", 4), "square differs");
  expect(s * schubertPolynomial(P("1342")) ==
             Polynomial::parse("x2^3x3 + 2x1x2^2x3 + 2x1^2x2x3 + x1^3x3 + x1x2^3 + x1^2x2^2 + x1^3x2", 4),
         "product with 1342 differs");
  const auto pos = rootGameInitial(ws);
  expect(pos.tokens(2, 3) == 2 && pos.tokens(2, 4) == 3 && pos.tokens(3, 4) == 1 && pos.total() == 6,
         "initial position differs");
}

void dcClassExample(Expect& expect) {
  const auto ws = Ps({"3216547", "3216547", "4261573"});
  expect(vanishes(symmetricTest(SchubertProblem::symmetric(ws))), "symmetric test does not vanish");
  const auto cls = dcClass(makeTriple(ws[0], ws[1], ws[2]));
  std::set<Triple> listed;
  for (auto t : {Ps({"3216574", "3261547", "4216537"}), Ps({"3216547", "3216574", "4261537"}),
                 Ps({"3261547", "3216574", "4216537"}), Ps({"3261547", "3216547", "4216573"}),
                 Ps({"3216574", "3216547", "4261537"}), Ps({"3216547", "3216547", "4261573"}),
                 Ps({"3261574", "3216547", "4216537"}), Ps({"3216547", "3261574", "4216537"}),
                 Ps({"3216547", "3261547", "4216573"})})
    listed.insert({t[0], t[1], t[2]});
  expect(cls == listed, "dc class differs from the listed nine");
  expect(inconclusive(dcTest(ws)), "dc test is not inconclusive");
}

void rootGameExample(Expect& expect) {
  const auto ws = Ps({"3216547", "3216547", "1652473"});
  expect(P("1652473").leftLongest() == P("7236415"), "w0 w differs from 7236415");
  expect(inconclusive(rootGameTest(ws)), "root game is doomed");
  expect(inconclusive(dcTest(ws)), "dc test is not inconclusive");
  expect(dcClass(makeTriple(ws[0], ws[1], ws[2])).size() == 9, "dc class size is not 9");
  expect(inconclusive(symmetricTest(SchubertProblem::symmetric(ws))), "symmetric test is not inconclusive");
  const auto p = SchubertProblem::asymmetric(Ps({"3216547", "3216547"}), P("7236415"));
  const Verdict v = asymmetricTest(p);
  expect(vanishes(v), "asymmetric test does not vanish");
  expect(revalidate(p, v), "certificate does not revalidate");
}

void sevenOnes(Expect& expect) {
  // Every tableau would need at least seven 1's.
  const auto p = SchubertProblem::symmetric(Ps({"3216547", "3216547", "4261573"}));
  const Verdict v = symmetricTest(p);
  expect(vanishes(v), "symmetric test does not vanish");
  expect(revalidate(p, v), "certificate does not revalidate");
  const Diagram d = concatRothe(p.factors);
  int rowOne = 0;
  for (const auto& c : d.cells()) rowOne += c.row == 1;
  expect(rowOne >= 7, "fewer than seven cells in row 1");
}

}  // namespace

std::vector<ExampleCheck> workedExamples() {
  const std::vector<std::pair<std::string, std::function<void(Expect&)>>> checks = {
      {"(3256147,2143657,4632175): symmetric vanishes", exampleOneTwo},
      {"21543: Schubitope, theta bounds and facets", figureOne},
      {"(4123,1342 -> 4312): asymmetric strictly stronger", strictness},
      {"(231645,231645 -> 451623): inconclusive for every monomial", exampleFourNine},
      {"(1243,1342,3142): Bruhat only", bruhatExample},
      {"(1423,1423,1423): symmetric only", cubeExample},
      {"(1423,1423,1342): dc trivial, doomed", dcTrivialExample},
      {"(3216547,3216547,4261573): dc class of nine", dcClassExample},
      {"(3216547,3216547,4261573): seven 1's forced", sevenOnes},
      {"(3216547,3216547,1652473): asymmetric only", rootGameExample},
  };
  std::vector<ExampleCheck> out;
  for (const auto& [name, fn] : checks) {
    Expect expect;
    std::string error;
    try {
      fn(expect);
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    out.push_back({name, expect.ok() && error.empty(), error.empty() ? expect.failures() : error});
  }
  return out;
}

bool reportWorkedExamples(std::ostream& out) {
  bool all = true;
  for (const auto& c : workedExamples()) {
    out << (c.passed ? "ok    " : "FAIL  ") << c.name;
    if (!c.passed) out << "  (" << c.detail << ")";
    out << '\n';
    all = all && c.passed;
  }
  return all;
}

}  // namespace schubvan
