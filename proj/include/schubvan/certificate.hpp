#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "schubvan/diagram.hpp"
#include "schubvan/permutation.hpp"
#include "schubvan/schubitope.hpp"

namespace schubvan {

enum class Outcome { Vanishes, Inconclusive, DegreeMismatch };

std::string_view outcomeName(Outcome o);  // VANISHES, INCONCLUSIVE, DEGREE_MISMATCH
Outcome parseOutcome(std::string_view name);

using Triple = std::array<Permutation, 3>;

// w^(i) is not <= w0 w^(j) in Bruhat order (1-based factor indices).
struct BruhatWitness {
  int i = 0;
  int j = 0;
  bool operator==(const BruhatWitness&) const = default;
};

// path.front() is the input triple, path.back() has a common ascent at `position`;
// consecutive entries differ by one dc move.
struct DescentCyclingWitness {
  std::vector<Triple> path;
  int position = 0;
  bool operator==(const DescentCyclingWitness&) const = default;
};

// Upper order filter of the positive roots holding more tokens than roots.
struct DoomedFilter {
  std::vector<std::pair<int, int>> roots;  // (m, n') with m < n', sorted
  int tokens = 0;
  bool operator==(const DoomedFilter&) const = default;
};

using Certificate = std::variant<InfeasibleSubset, FarkasCertificate, RelaxationPoint, Filling,
                                 BruhatWitness, DescentCyclingWitness, DoomedFilter>;

std::string_view certificateKind(const Certificate& c);

struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  std::string method;
  std::optional<Certificate> certificate;
  // Schubitope methods: the content vector tested and whether empty columns were dropped.
  ExponentVector content;
  bool compressed = false;
  std::string detail;
};

// Independent checks. These rebuild Rothe diagrams, theta and the relaxation
// from scratch instead of calling the code that produced the certificate.
namespace check {

std::vector<Cell> rotheCells(const Permutation& w);
// Concatenated diagram of the words embedded into S_N, optionally without empty columns.
Diagram concatenated(std::span<const Permutation> ws, bool compress);
int theta(const Diagram& d, RowSet s);

bool subsetCertificate(const Diagram& d, const ExponentVector& alpha, const InfeasibleSubset& c);
// Replays the Farkas combination over (I), (II) and (III) in full.
bool farkasCertificate(const Diagram& d, const ExponentVector& alpha, const FarkasCertificate& c);
bool relaxationWitness(const Diagram& d, const ExponentVector& alpha, const RelaxationPoint& p);
bool tableauWitness(const Diagram& d, const ExponentVector& alpha, const Filling& f);

// Rank-matrix Bruhat criterion: u <= v iff #{a <= i : u(a) >= j} <= #{a <= i : v(a) >= j}.
bool bruhatLeqRank(const Permutation& u, const Permutation& v);
bool bruhatWitness(std::span<const Permutation> ws, const BruhatWitness& c);
bool isDcMove(const Triple& from, const Triple& to);
bool descentCyclingWitness(std::span<const Permutation> ws, const DescentCyclingWitness& c);
bool doomedFilter(std::span<const Permutation> ws, const DoomedFilter& c);

// Certificate of a Schubitope verdict against its diagram and content.
bool schubitopeCertificate(const Diagram& d, const ExponentVector& alpha, const Certificate& c);

}  // namespace check

}  // namespace schubvan
