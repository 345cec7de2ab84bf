#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "schubvan/gpermutahedron.hpp"
#include "schubvan/schubert.hpp"

using namespace schubvan;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<mpq_class> Q(std::initializer_list<long> xs) {
  std::vector<mpq_class> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::set<LatticePoint> asLattice(const std::set<ExponentVector>& s) {
  std::set<LatticePoint> out;
  for (const auto& e : s) out.insert(LatticePoint(e.begin(), e.end()));
  return out;
}

GPermutahedron schubitope(const char* w) { return GPermutahedron(SubmodularFn::fromSchubitope(Diagram::rothe(P(w)))); }

// z(S) = sum_k c_k min(|S cap A_k|, r_k) + sum_{i in S} m_i: concave-of-modular plus modular.
SubmodularFn randomSubmodular(oracle::Gen& gen, int n) {
  const int terms = gen.uniform(1, 4);
  std::vector<std::uint32_t> sets;
  std::vector<int> caps, weights, modular(n);
  for (int k = 0; k < terms; ++k) {
    sets.push_back(static_cast<std::uint32_t>(gen.uniform(1, (1 << n) - 1)));
    caps.push_back(gen.uniform(0, n));
    weights.push_back(gen.uniform(0, 3));
  }
  for (int& m : modular) m = gen.uniform(-2, 3);
  std::vector<mpq_class> values(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < values.size(); ++s) {
    long v = 0;
    for (int k = 0; k < terms; ++k) v += weights[k] * std::min(std::popcount(s & sets[k]), caps[k]);
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1) v += modular[i];
    values[s] = v;
  }
  return SubmodularFn(n, std::move(values));
}

}  // namespace

TEST_CASE("vertexOf") {
  const GPermutahedron std3(SubmodularFn::standardPermutahedron(3));
  CHECK(std3.vertexOf(P("123")) == Q({2, 1, 0}));
  CHECK(std3.vertexOf(P("321")) == Q({0, 1, 2}));
  CHECK_THROWS_AS(std3.vertexOf(P("1234")), std::invalid_argument);

  // 15432 gives a vertex of the hull of the 13 support vectors of S_21543.
  const GPermutahedron s = schubitope("21543");
  const auto support = asLattice(schubertPolynomial(P("21543")).support());
  const auto v = s.vertexOf(P("15432"));
  LatticePoint vi;
  for (const auto& x : v) {
    REQUIRE(x.get_den() == 1);
    vi.push_back(x.get_num().get_si());
  }
  const auto hull = convexHullVertices(support);
  CHECK(std::find(hull.begin(), hull.end(), vi) != hull.end());
}

TEST_CASE("Minkowski sums") {
  const GPermutahedron p(SubmodularFn::standardPermutahedron(3));
  const GPermutahedron origin(SubmodularFn::zero(3));
  CHECK(minkowskiSum(p, origin).latticePoints() == p.latticePoints());
  const auto doubled = minkowskiSum(p, p);
  for (std::uint32_t s = 0; s < 8; ++s) CHECK(doubled.z()(s) == 2 * p.z()(s));

  const auto sum = minkowskiSum(schubitope("4123"), schubitope("1342"));
  CHECK(sum.latticePoints() == std::set<LatticePoint>{{4, 0, 1, 0}, {4, 1, 0, 0}, {3, 1, 1, 0}});
  CHECK_THROWS_AS(minkowskiSum(p, GPermutahedron(SubmodularFn::zero(2))), std::invalid_argument);
}

TEST_CASE("lattice points") {
  CHECK(GPermutahedron(SubmodularFn::zero(3)).latticePoints() == std::set<LatticePoint>{{0, 0, 0}});
  const auto std3 = GPermutahedron(SubmodularFn::standardPermutahedron(3)).latticePoints();
  CHECK(std3.size() == 7);
  CHECK(std3.count({1, 1, 1}) == 1);
  const auto pts = schubitope("21543").latticePoints();
  CHECK(pts.size() == 13);
  CHECK(pts == asLattice(schubertPolynomial(P("21543")).support()));

  std::vector<mpq_class> half(4, 0);
  half[1] = half[2] = mpq_class(1, 2);
  half[3] = 1;
  CHECK_THROWS_AS(GPermutahedron(SubmodularFn(2, half)).latticePoints(), std::invalid_argument);
}

TEST_CASE("integer decomposition") {
  const GPermutahedron point(SubmodularFn::zero(3));
  CHECK(checkIntegerDecomposition(point, point));
  const GPermutahedron std3(SubmodularFn::standardPermutahedron(3));
  CHECK(checkIntegerDecomposition(std3, std3));
  const auto s = schubitope("1423");
  CHECK(checkIntegerDecomposition(s, s));
  const auto pts = s.latticePoints();
  const auto sums = minkowskiSum(pts, pts);
  const Polynomial sq = schubertPolynomial(P("1423")) * schubertPolynomial(P("1423"));
  CHECK(sums.size() == 5);
  CHECK(sums == asLattice(sq.support()));
}

TEST_CASE("construction rejects bad set functions") {
  CHECK_THROWS_AS(SubmodularFn(1, Q({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(SubmodularFn(2, Q({0, 1})), std::invalid_argument);
  // z({1}) + z({2}) < z({1,2}) + z(empty)
  CHECK_THROWS_AS(SubmodularFn(2, Q({0, 0, 0, 1})), std::invalid_argument);
}

TEST_CASE("property: Schubitope set functions are submodular, S_5 and 10-row diagrams") {
  for (const auto& w : allPermutations(5)) {
    const auto z = SubmodularFn::fromSchubitope(Diagram::rothe(w));
    REQUIRE(z.isSubmodularPairwise());
    REQUIRE(z(0x1f) == w.length());
  }
  oracle::Gen gen(5);
  for (int k = 0; k < 3; ++k) {
    const Permutation w(gen.permutation(10));
    const auto z = SubmodularFn::fromSchubitope(Diagram::rothe(w));
    REQUIRE(z.isSubmodularPairwise());
  }
}

TEST_CASE("property: vertices satisfy the defining inequalities, n <= 5") {
  oracle::Gen gen(7);
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k < 20; ++k) {
      const GPermutahedron p(randomSubmodular(gen, n));
      for (const auto& w : allPermutations(n)) REQUIRE(p.contains(p.vertexOf(w)));
    }
}

TEST_CASE("property: integer decomposition for random integral z, n <= 5") {
  oracle::Gen gen(13);
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k < 15; ++k) {
      const GPermutahedron p(randomSubmodular(gen, n)), q(randomSubmodular(gen, n));
      REQUIRE(checkIntegerDecomposition(p, q));
    }
}

TEST_CASE("property: hull vertices are permutation vertices, n <= 4") {
  oracle::Gen gen(17);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < 15; ++k) {
      const GPermutahedron p(randomSubmodular(gen, n));
      std::set<LatticePoint> vertices;
      for (const auto& w : allPermutations(n)) {
        LatticePoint v;
        for (const auto& x : p.vertexOf(w)) v.push_back(x.get_num().get_si());
        vertices.insert(v);
      }
      for (const auto& h : convexHullVertices(p.latticePoints())) REQUIRE(vertices.count(h) == 1);
    }
}
