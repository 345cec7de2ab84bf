#pragma once

#include <gmpxx.h>

#include <utility>
#include <variant>
#include <vector>

// Exact rational linear feasibility: does {x >= 0 : constraints} have a point?
namespace schubvan::lp {

enum class Sense { LessEqual, GreaterEqual, Equal };

struct Constraint {
  std::vector<std::pair<int, mpq_class>> terms;  // (variable index, coefficient)
  Sense sense = Sense::LessEqual;
  mpq_class rhs;
};

struct Problem {
  int numVars = 0;
  std::vector<Constraint> constraints;

  void add(std::vector<std::pair<int, mpq_class>> terms, Sense sense, mpq_class rhs) {
    constraints.push_back({std::move(terms), sense, std::move(rhs)});
  }
};

struct Feasible {
  std::vector<mpq_class> x;
};

// Multipliers for the constraints rewritten as "a.x <= b" (GreaterEqual rows are
// negated). Inequality multipliers are >= 0, Equal multipliers are free. The
// combination sum(l_k a_k) is >= 0 in every coordinate while sum(l_k b_k) = -1,
// so with x >= 0 every feasible point would give 0 <= -1.
struct Infeasible {
  std::vector<mpq_class> multipliers;
};

using Result = std::variant<Feasible, Infeasible>;

struct Stats {
  long pivots = 0;
};

// Phase-1 simplex on a dense tableau, Bland's rule.
Result solve(const Problem& problem, Stats* stats = nullptr);

bool satisfies(const Problem& problem, const std::vector<mpq_class>& x);
bool verifyFarkas(const Problem& problem, const std::vector<mpq_class>& multipliers);

}  // namespace schubvan::lp
