#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "schubvan/diagram.hpp"
#include "schubvan/schubitope.hpp"

// Data-parallel inner loops. Every kernel has a Serial path that is the
// reference implementation the tests compare the OpenMP path against.
namespace schubvan::kernels {

enum class Exec { Serial, Parallel };

// Runs body(i) for i in [0, count). Parallel uses an OpenMP dynamic schedule;
// the first exception thrown by any iteration is rethrown after the loop.
void parallelFor(std::size_t count, Exec exec, const std::function<void(std::size_t)>& body,
                 int threads = 0);

// theta_D(S) for every S in [0, 2^rows).
std::vector<int> thetaTable(const Diagram& d, Exec exec);

// First violated Schubitope inequality in subset scan order, or nullopt.
// Serial walks the lexicographic scan; Parallel min-reduces the scan key.
std::optional<InfeasibleSubset> firstViolation(const Diagram& d, const ExponentVector& alpha,
                                               Exec exec);

// Same contract as schubitopeMembership, routed through firstViolation.
Membership membership(const Diagram& d, const ExponentVector& alpha, Exec exec);

// Lattice points of S_D, sorted lexicographically. Box [0, theta({i})] with
// sum |D|, filtered against a precomputed theta table.
std::vector<ExponentVector> schubitopeLatticePoints(const Diagram& d, Exec exec);

int defaultThreads();

}  // namespace schubvan::kernels
