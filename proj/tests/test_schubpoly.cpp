#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "schubvan/kernels.hpp"
#include "schubvan/schubert.hpp"
#include "schubvan/schubitope.hpp"

using namespace schubvan;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<Permutation> Ps(std::initializer_list<const char*> ws) {
  std::vector<Permutation> out;
  for (const char* w : ws) out.push_back(P(w));
  return out;
}

oracle::Poly toOracle(const Polynomial& f) {
  oracle::Poly out;
  for (const auto& [e, c] : f.terms()) out[e] = c.get_si();
  return out;
}

Polynomial X(std::string_view s, int n) { return Polynomial::parse(s, n); }

}  // namespace

TEST_CASE("divided differences") {
  CHECK(dividedDifference(X("x1", 2), 1) == Polynomial::one(2));
  CHECK(dividedDifference(X("x1x2", 2), 1).isZero());
  CHECK(dividedDifference(X("x1^2", 2), 1) == X("x1 + x2", 2));
  CHECK(dividedDifference(X("x2^3", 3), 1) == X("-x1^2 - x1x2 - x2^2", 3));
  CHECK(dividedDifference(X("x1^2x3", 3), 2) == X("-x1^2", 3));
}

TEST_CASE("Schubert polynomials") {
  const Polynomial s = schubertPolynomial(P("21543"));
  CHECK(s.size() == 13);
  CHECK(s == X("x1^3x2 + x1^3x3 + x1^3x4 + x1^2x2^2 + x1^2x3^2 + 2x1^2x2x3 + x1^2x2x4 + x1^2x3x4"
               " + x1x2x3^2 + x1x2^2x3 + x1x2^2x4 + x1x3^2x4 + x1x2x3x4",
               5));
  CHECK(schubertPolynomial(P("451623")) == X("x1^3x2^3x4^2 + x1^3x2^3x3x4 + x1^3x2^3x3^2", 6));
  CHECK(schubertPolynomial(P("1234")) == Polynomial::one(4));
  CHECK(schubertPolynomial(P("4321")) == X("x1^3x2^2x3", 4));
  CHECK(schubertPolynomial(P("132")) == X("x1 + x2", 3));
}

TEST_CASE("products and coefficients") {
  const Polynomial s = schubertPolynomial(P("1423"));
  CHECK(s * s == X("x2^4 + 2x1x2^3 + 3x1^2x2^2 + 2x1^3x2 + x1^4", 4));
  CHECK((s * s * s).coefficient({3, 2, 1, 0}) == 0);
  CHECK(s * Polynomial::one(4) == s);
  const std::vector<Polynomial> three{s, s, s};
  CHECK(productCoefficient(three, {3, 2, 1, 0}) == 0);
  CHECK(productCoefficient(three, {3, 3, 0, 0}) == 7);
}

TEST_CASE("text formats") {
  const Polynomial s = schubertPolynomial(P("1423"));
  CHECK(s.str() == "x1^2 + x1*x2 + x2^2");
  CHECK(s.dump() == "1 0 2 0 0\n1 1 1 0 0\n1 2 0 0 0\n");
  CHECK(Polynomial::parseDump(s.dump()) == s);
  CHECK(Polynomial::parse(s.str(), 4) == s);
  const Polynomial big = schubertPolynomial(P("21543")) * schubertPolynomial(P("13254"));
  CHECK(Polynomial::parse(big.str(), 5) == big);
  CHECK(Polynomial::parseDump(big.dump()) == big);
  CHECK(Polynomial::parse("0", 3).isZero());
}

TEST_CASE("intersection numbers") {
  CHECK(intersectionNumber(Ps({"321", "123", "123"})).value == 1);
  CHECK(intersectionNumber(Ps({"1423", "1423", "1423"})).value == 0);
  CHECK(intersectionNumber(Ps({"3256147", "2143657", "4632175"})).value == 0);
  const auto mismatch = intersectionNumber(Ps({"1423", "1423"}));
  CHECK(mismatch.degreeMismatch);
  CHECK(mismatch.value == 0);
  CHECK(intersectionNumber(Ps({"213", "213", "213"})).value == 0);
  CHECK(intersectionNumber(Ps({"213", "132", "213"})).value == 1);
}

TEST_CASE("asymmetric coefficients") {
  CHECK(asymmetricCoefficient(Ps({"4123", "1342"}), P("4312")).value == 0);
  CHECK(asymmetricCoefficient(Ps({"231645", "231645"}), P("451623")).value == 0);
  for (const auto& w : allPermutations(4)) CHECK(asymmetricCoefficient(std::vector<Permutation>{w, P("1234")}, w).value == 1);
  // The raw coefficient of the staircase monomial overcounts here.
  const std::vector<Polynomial> fs{schubertPolynomial(P("4123")), schubertPolynomial(P("1342")),
                                   schubertPolynomial(P("1243"))};
  CHECK(productCoefficient(fs, {3, 2, 1, 0}) == 1);
}

TEST_CASE("SNP") {
  CHECK(verifySNP(P("21543")));
  CHECK(verifySNP(P("1")));
  CHECK(verifySNP(P("123")));
}

TEST_CASE("property: agrees with an independent divided-difference chain, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : allPermutations(n)) REQUIRE(toOracle(schubertPolynomial(w)) == oracle::schubert(oracle::word(w)));
}

TEST_CASE("property: braid consistency, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : allPermutations(n))
      REQUIRE(schubertPolynomial(w, AscentChoice::First) == schubertPolynomial(w, AscentChoice::Last));
}

TEST_CASE("property: table lookups equal direct computation, n <= 6") {
  const SchubertTable table(6);
  for (const auto& w : allPermutations(6)) REQUIRE(table(w) == schubertPolynomial(w));
  for (const auto& w : allPermutations(4)) REQUIRE(schubertFor(w, 6, &table) == schubertPolynomial(w).withNumVars(6));
}

TEST_CASE("property: stability under embedding, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : allPermutations(n))
      REQUIRE(schubertPolynomial(w.embed(n + 1)) == schubertPolynomial(w).withNumVars(n + 1));
}

TEST_CASE("property: positivity and the code monomial, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : allPermutations(n)) {
      const Polynomial s = schubertPolynomial(w);
      for (const auto& [e, c] : s.terms()) REQUIRE(c > 0);
      REQUIRE(s.coefficient(w.code()) == 1);
      REQUIRE(s.terms().begin()->first == w.code());
      REQUIRE(s.degree() == w.length());
    }
}

TEST_CASE("property: SNP for every w in S_5") {
  for (const auto& w : allPermutations(5)) REQUIRE(verifySNP(w));
}

TEST_CASE("property: product support equals the Schubitope of D(u,v), S_4 pairs") {
  oracle::Gen gen(41);
  for (int k = 0; k < 150; ++k) {
    const Permutation u(gen.permutation(4)), v(gen.permutation(4));
    const std::vector<Permutation> uv{u, v};
    const auto pts = kernels::schubitopeLatticePoints(concatRothe(uv), kernels::Exec::Serial);
    const auto support = (schubertPolynomial(u) * schubertPolynomial(v)).support();
    REQUIRE(std::set<ExponentVector>(pts.begin(), pts.end()) == support);
  }
}

TEST_CASE("property: coefficient nonzero iff alpha in the Schubitope sum, all S_4 pairs") {
  const auto all = allPermutations(4);
  for (const auto& u : all)
    for (const auto& v : all) {
      const Polynomial f = schubertPolynomial(u) * schubertPolynomial(v);
      const std::vector<Permutation> uv{u, v};
      const Diagram d = concatRothe(uv);
      for (const auto& alpha : compositions(d.size(), 4))
        REQUIRE((f.coefficient(alpha) != 0) == schubitopeMembership(d, alpha).member);
    }
}

TEST_CASE("property: oracle equals the Schubert-basis expansion, n <= 4") {
  // Triples: C_{u,v,w} = [S_{w0 w}] S_u S_v.
  for (int n = 2; n <= 4; ++n)
    for (const auto& t : oracle::wellPosedTriples(n)) {
      const auto expansion = oracle::expand(oracle::pad(oracle::multiply(oracle::schubert(t[0]), oracle::schubert(t[1])), n));
      const auto it = expansion.find(oracle::strip(oracle::longestTimes(t[2])));
      const long long expected = it == expansion.end() ? 0 : it->second;
      const std::vector<Permutation> ws{oracle::perm(t[0]), oracle::perm(t[1]), oracle::perm(t[2])};
      REQUIRE(intersectionNumber(ws).value.get_si() == expected);
      REQUIRE(oracle::topDivided(t) == expected);
      REQUIRE(asymmetricCoefficient(std::vector<Permutation>{ws[0], ws[1]}, ws[2].leftLongest()).value.get_si() == expected);
    }
}

TEST_CASE("property: library expansion reconstructs and is nonnegative, S_4 pairs") {
  oracle::Gen gen(43);
  for (int k = 0; k < 60; ++k) {
    const Permutation u(gen.permutation(4)), v(gen.permutation(4));
    const Polynomial f = schubertPolynomial(u) * schubertPolynomial(v);
    const auto e = schubertExpansion(f);
    int width = 4;
    for (const auto& [w, c] : e) {
      REQUIRE(c > 0);
      width = std::max(width, w.size());
    }
    Polynomial back(width);
    for (const auto& [w, c] : e) back = back + schubertPolynomial(w).withNumVars(width) * c;
    REQUIRE(back == f.withNumVars(width));
    const auto ref = oracle::expand(oracle::pad(toOracle(f), 4));
    REQUIRE(ref.size() == e.size());
    for (const auto& [w, c] : e) REQUIRE(ref.at(oracle::strip(oracle::word(w))) == c.get_si());
  }
}

TEST_CASE("property: oracle on random S_5 triples against top divided differences") {
  oracle::Gen gen(47);
  const SchubertTable table(5);
  for (int k = 0; k < 60; ++k) {
    const auto t = gen.wellPosedTriple(5);
    const std::vector<Permutation> ws{oracle::perm(t[0]), oracle::perm(t[1]), oracle::perm(t[2])};
    const auto c = intersectionNumber(ws, &table);
    REQUIRE(c.value >= 0);
    REQUIRE(c.value.get_si() == oracle::topDivided(t));
  }
}
