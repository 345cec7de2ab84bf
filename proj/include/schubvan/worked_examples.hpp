#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubvan {

struct ExampleCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Pinned worked examples with their expected outcomes. Each check is reported
// separately; a deviation never aborts the remaining checks.
std::vector<ExampleCheck> workedExamples();

// Prints one line per check and returns true iff all passed.
bool reportWorkedExamples(std::ostream& out);

}  // namespace schubvan
