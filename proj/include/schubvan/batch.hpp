#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "schubvan/certificate.hpp"
#include "schubvan/schubert.hpp"
#include "schubvan/vanishing.hpp"

namespace schubvan::batch {

using Json = nlohmann::ordered_json;

// Test names, in output order.
inline const std::vector<std::string> kTestNames = {
    "schubitope_symmetric", "schubitope_asymmetric", "flexible", "bruhat", "descent_cycling", "root_game"};

struct ProblemRecord {
  std::string id;
  int line = 0;
  Mode mode = Mode::Symmetric;
  std::vector<std::string> factors;
  std::optional<std::string> target;

  bool operator==(const ProblemRecord&) const = default;
};

struct ParseError {
  int line = 0;
  std::string message;
};

// "sym: p1, p2, ..., pk" or "asym: p1, ..., p(k-1) -> target". Words may use spaces
// inside ("3 2 1") or be contiguous digits. Returns nullopt for blank and comment lines.
std::optional<ProblemRecord> parseProblemLine(std::string_view text, int line);
std::string formatProblemLine(const ProblemRecord& r);
SchubertProblem toProblem(const ProblemRecord& r);

struct TestVerdict {
  std::string status;  // VANISHES, INCONCLUSIVE, DEGREE_MISMATCH or SKIPPED
  std::string detail;
  ExponentVector content;
  bool compressed = false;
  std::optional<Certificate> certificate;

  bool operator==(const TestVerdict&) const = default;
};

struct ResultRecord {
  std::string id;
  int line = 0;
  std::optional<ProblemRecord> problem;  // absent on a parse error
  int n = 0;
  std::map<std::string, TestVerdict> verdicts;
  std::optional<std::string> oracle;  // decimal
  std::optional<std::string> error;
  double elapsedMs = 0;

  bool operator==(const ResultRecord&) const = default;
};

enum class Format { Text, JsonLines };

struct Options {
  std::set<std::string> tests = {"schubitope_symmetric", "schubitope_asymmetric"};
  int oracleMaxN = 6;
  bool forceOracle = false;
  int flexibleSamples = 0;
  std::uint64_t seed = 0;
  bool compress = false;
  bool stable = false;
  Format format = Format::Text;
  int threads = 0;
};

// Accepts test names plus "schubitope", "rivals" and "all". Throws std::invalid_argument.
std::set<std::string> parseTestList(std::string_view list);

Json certificateToJson(const Certificate& c);
Certificate certificateFromJson(const Json& j);
Json toJson(const ResultRecord& r);
ResultRecord resultFromJson(const Json& j);
std::string formatText(const ResultRecord& r);

// Evaluates one problem; `table` (may be null) serves the oracle for small n.
ResultRecord evaluate(const ProblemRecord& p, const Options& opt, const SchubertTable* table);

struct Summary {
  int problems = 0;
  int parseErrors = 0;
  int internalErrors = 0;
};

// Reads all lines, evaluates in parallel, writes records in input order.
// Returns the exit code: 0 ok, 1 internal error, 2 input error.
int runBatch(std::istream& in, std::ostream& out, std::ostream& err, const Options& opt,
             Summary* summary = nullptr);

}  // namespace schubvan::batch
