// Serial reference vs OpenMP kernels. Prints one line per kernel with both
// timings and whether the outputs agree.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "schubvan/batch.hpp"
#include "schubvan/kernels.hpp"
#include "schubvan/permutation.hpp"

using namespace schubvan;
using kernels::Exec;

namespace {

template <class F>
double timeMs(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

template <class T>
void compare(const char* name, const std::function<T(Exec)>& kernel, int reps) {
  T serial{}, parallel{};
  const double ts = timeMs([&] { serial = kernel(Exec::Serial); }, reps);
  const double tp = timeMs([&] { parallel = kernel(Exec::Parallel); }, reps);
  std::printf("%-28s serial %10.3f ms  parallel %10.3f ms  speedup %5.2fx  %s\n", name, ts, tp,
              tp > 0 ? ts / tp : 0.0, serial == parallel ? "agree" : "DISAGREE");
}

std::string batchInput() {
  std::ostringstream out;
  for (const auto& u : allPermutations(4))
    for (const auto& v : allPermutations(4)) {
      const int rest = binomial2(4) - u.length() - v.length();
      if (rest < 0) continue;
      for (const auto& w : allPermutations(4))
        if (w.length() == rest) out << "sym: " << u.str() << ", " << v.str() << ", " << w.str() << '\n';
    }
  return out.str();
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  const auto ws = std::vector<Permutation>{Permutation::parse("3256147"), Permutation::parse("2143657"),
                                           Permutation::parse("4632175")};
  const Diagram big = concatRothe(ws);
  const ExponentVector stair = {6, 5, 4, 3, 2, 1, 0};
  // A wider diagram to give the subset scans some work.
  std::vector<Permutation> wide;
  for (const char* w : {"3 1 2 6 5 4 9 8 7 12 11 10", "2 1 4 3 6 5 8 7 10 9 12 11", "1 3 2 5 4 7 6 9 8 11 10 12"})
    wide.push_back(Permutation::parse(w));
  const Diagram d12 = concatRothe(wide);
  ExponentVector a12(12, 0);
  a12[0] = d12.size();

  compare<std::vector<int>>("thetaTable n=7", [&](Exec e) { return kernels::thetaTable(big, e); }, 50);
  compare<std::vector<int>>("thetaTable n=12", [&](Exec e) { return kernels::thetaTable(d12, e); }, 5);
  compare<std::optional<InfeasibleSubset>>(
      "firstViolation n=7", [&](Exec e) { return kernels::firstViolation(big, stair, e); }, 50);
  compare<std::optional<InfeasibleSubset>>(
      "firstViolation n=12", [&](Exec e) { return kernels::firstViolation(d12, a12, e); }, 5);
  compare<std::vector<ExponentVector>>(
      "latticePoints 21543", [&](Exec e) { return kernels::schubitopeLatticePoints(Diagram::rothe(Permutation::parse("21543")), e); },
      50);
  compare<std::vector<ExponentVector>>(
      "latticePoints D(u,v) S5",
      [&](Exec e) {
        const std::vector<Permutation> uv{Permutation::parse("53412"), Permutation::parse("35142")};
        return kernels::schubitopeLatticePoints(concatRothe(uv), e);
      },
      5);

  const std::string input = batchInput();
  compare<std::string>(
      "batch S4 triples",
      [&](Exec e) {
        batch::Options opt;
        opt.tests = batch::parseTestList("all");
        opt.stable = true;
        opt.threads = e == Exec::Serial ? 1 : 0;
        std::istringstream in(input);
        std::ostringstream out, err;
        batch::runBatch(in, out, err, opt);
        return out.str();
      },
      1);
  return 0;
}
