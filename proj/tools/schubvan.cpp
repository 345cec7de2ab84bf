#include <CLI11.hpp>

#include <omp.h>

#include <fstream>
#include <iostream>
#include <string>

#include "schubvan/batch.hpp"
#include "schubvan/schubert.hpp"
#include "schubvan/worked_examples.hpp"

using namespace schubvan;

int main(int argc, char** argv) {
  CLI::App app{"Vanishing tests for Schubert intersection numbers"};
  app.require_subcommand(1);

  batch::Options opt;
  std::string input = "-";
  std::string tests = "schubitope";
  std::string format = "text";
  auto* run = app.add_subcommand("run", "Evaluate a batch of problems");
  run->add_option("file", input, "Problem file, '-' for standard input");
  run->add_option("--tests", tests, "Comma list: schubitope_symmetric, schubitope_asymmetric, flexible, "
                                    "bruhat, descent_cycling, root_game, schubitope, rivals, all");
  run->add_option("--oracle-max-n", opt.oracleMaxN, "Largest rank for the Schubert polynomial oracle");
  run->add_flag("--force-oracle", opt.forceOracle, "Run the oracle at any rank (factorial cost)");
  run->add_option("--flexible-samples", opt.flexibleSamples, "Sampled content vectors for the flexible test");
  run->add_option("--seed", opt.seed, "Seed for the sampler");
  run->add_flag("--compress", opt.compress, "Drop empty columns of concatenated diagrams");
  run->add_flag("--stable", opt.stable, "Zero all timing fields");
  run->add_option("--format", format, "text or jsonlines")->check(CLI::IsMember({"text", "jsonlines"}));
  run->add_option("--threads", opt.threads, "Worker threads (0 = all available)");

  auto* examples = app.add_subcommand("examples", "Reproduce the pinned worked examples");

  std::string word;
  bool dump = false;
  auto* poly = app.add_subcommand("poly", "Print a Schubert polynomial");
  poly->add_option("perm", word, "One-line notation")->required();
  poly->add_flag("--dump", dump, "One term per line: coeff e1 ... en");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      opt.tests = batch::parseTestList(tests);
      opt.format = format == "jsonlines" ? batch::Format::JsonLines : batch::Format::Text;
      if (opt.forceOracle && opt.oracleMaxN < 7)
        std::cerr << "warning: --force-oracle expands Schubert polynomials at every rank; cost grows factorially\n";
      if (input == "-") return batch::runBatch(std::cin, std::cout, std::cerr, opt);
      std::ifstream in(input);
      if (!in) {
        std::cerr << "cannot open " << input << '\n';
        return 2;
      }
      return batch::runBatch(in, std::cout, std::cerr, opt);
    }
    if (*examples) return reportWorkedExamples(std::cout) ? 0 : 1;
    if (*poly) {
      const Polynomial p = schubertPolynomial(Permutation::parse(word));
      std::cout << (dump ? p.dump() : p.str() + "\n");
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
