#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "schubvan/certificate.hpp"
#include "schubvan/diagram.hpp"
#include "schubvan/permutation.hpp"
#include "schubvan/schubitope.hpp"

namespace schubvan {

enum class Mode { Symmetric, Asymmetric };

// Symmetric: C_{factors}. Asymmetric: C^{target}_{factors}.
struct SchubertProblem {
  std::vector<Permutation> factors;
  std::optional<Permutation> target;

  static SchubertProblem symmetric(std::vector<Permutation> factors);
  static SchubertProblem asymmetric(std::vector<Permutation> factors, Permutation target);

  Mode mode() const { return target ? Mode::Asymmetric : Mode::Symmetric; }
  // Common rank N = largest word length, target included.
  int n() const;
  // Symmetric: sum l = C(N,2). Asymmetric: sum l = l(target).
  bool wellPosed() const;
  // Factors embedded into S_N, with w0 * target appended in the asymmetric case.
  std::vector<Permutation> symmetricFactors() const;
  // Factors embedded into S_N.
  std::vector<Permutation> embeddedFactors() const;
};

struct TestOptions {
  bool compress = false;  // drop all-empty columns of the concatenated diagram
};

// (n-1, n-2, ..., 1, 0)
ExponentVector staircase(int n);

// Decides P(D, alpha); on infeasibility attaches vanishingCertificate(D, alpha).
Verdict schubitopeVerdict(const Diagram& d, const ExponentVector& alpha, const char* method,
                          bool compressed);

// D = D(w1,...,wk), alpha = staircase(N).
Verdict symmetricTest(const SchubertProblem& p, const TestOptions& opt = {});
// D = D(w1,...,w(k-1)), alpha = code(target).
Verdict asymmetricTest(const SchubertProblem& p, const TestOptions& opt = {});
// As asymmetricTest with content alpha; throws std::invalid_argument unless alpha lies in S_{D(target)}.
Verdict flexibleTest(const SchubertProblem& p, const ExponentVector& alpha, const TestOptions& opt = {});

// Content of a random column-strict filling of D(w) with label <= row. With no seed every
// column takes labels 1, 2, ..., z.
ExponentVector sampleSchubitopePoint(const Permutation& w, std::optional<std::uint64_t> seed = std::nullopt);

inline constexpr int kDefaultFlexibleSamples = 32;

// flexibleTest over up to `samples` distinct sampled points; stops at the first Vanishes.
Verdict randomizedFlexibleTest(const SchubertProblem& p, int samples, std::uint64_t seed,
                               const TestOptions& opt = {});

// Subset certificate when rows <= kMaxSubsetScanRows and a violated inequality exists,
// otherwise the Farkas certificate. Throws std::logic_error on a feasible instance.
Certificate vanishingCertificate(const Diagram& d, const ExponentVector& alpha);

struct StrengthReport {
  Verdict symmetric;   // symmetricTest on (factors, w0 * target)
  Verdict asymmetric;  // asymmetricTest on (factors -> target)
  bool implicationHolds = true;  // symmetric Vanishes => asymmetric Vanishes
};

StrengthReport strengthComparison(const SchubertProblem& p, const TestOptions& opt = {});

// Rebuilds the diagram of the verdict's test and checks its certificate independently.
// Needs the verdict's method to be one of the Schubitope tests.
bool revalidate(const SchubertProblem& p, const Verdict& v);

}  // namespace schubvan
