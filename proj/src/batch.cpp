#include "schubvan/batch.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "schubvan/kernels.hpp"
#include "schubvan/rivals.hpp"

namespace schubvan::batch {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> splitFactors(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    const auto piece = trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (piece.empty()) throw std::invalid_argument("empty factor");
    // Validate and normalise.
    out.push_back(Permutation::parse(piece).str());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::optional<ProblemRecord> parseProblemLine(std::string_view text, int line) {
  if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
  text = trim(text);
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("missing 'sym:' or 'asym:' prefix");
  const auto head = trim(text.substr(0, colon));
  auto body = trim(text.substr(colon + 1));
  ProblemRecord r;
  r.line = line;
  r.id = "L" + std::to_string(line);
  if (head == "sym") {
    r.mode = Mode::Symmetric;
    if (body.find("->") != std::string_view::npos) throw std::invalid_argument("symmetric problem with a target");
    r.factors = splitFactors(body);
    if (r.factors.size() < 2) throw std::invalid_argument("need at least two factors");
  } else if (head == "asym") {
    r.mode = Mode::Asymmetric;
    const auto arrow = body.find("->");
    if (arrow == std::string_view::npos) throw std::invalid_argument("asymmetric problem without '-> target'");
    r.factors = splitFactors(trim(body.substr(0, arrow)));
    const auto t = trim(body.substr(arrow + 2));
    if (t.empty()) throw std::invalid_argument("empty target");
    r.target = Permutation::parse(t).str();
  } else {
    throw std::invalid_argument("unknown problem kind '" + std::string(head) + "'");
  }
  return r;
}

std::string formatProblemLine(const ProblemRecord& r) {
  std::string s = r.mode == Mode::Symmetric ? "sym: " : "asym: ";
  for (std::size_t i = 0; i < r.factors.size(); ++i) s += (i ? ", " : "") + r.factors[i];
  if (r.target) s += " -> " + *r.target;
  return s;
}

SchubertProblem toProblem(const ProblemRecord& r) {
  std::vector<Permutation> fs;
  for (const auto& f : r.factors) fs.push_back(Permutation::parse(f));
  if (r.target) return SchubertProblem::asymmetric(std::move(fs), Permutation::parse(*r.target));
  return SchubertProblem::symmetric(std::move(fs));
}

std::set<std::string> parseTestList(std::string_view list) {
  std::set<std::string> out;
  std::stringstream ss{std::string(list)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t(trim(item));
    if (t.empty()) continue;
    if (t == "all") {
      out.insert(kTestNames.begin(), kTestNames.end());
    } else if (t == "schubitope") {
      out.insert({"schubitope_symmetric", "schubitope_asymmetric"});
    } else if (t == "rivals") {
      out.insert({"bruhat", "descent_cycling", "root_game"});
    } else if (std::find(kTestNames.begin(), kTestNames.end(), t) != kTestNames.end()) {
      out.insert(t);
    } else {
      throw std::invalid_argument("unknown test '" + t + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty test list");
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

Json rationals(const std::vector<mpq_class>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(q.get_str());
  return a;
}

std::vector<mpq_class> rationalsFrom(const Json& a) {
  std::vector<mpq_class> v;
  for (const auto& x : a) {
    mpq_class q(x.get<std::string>());
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

Json tripleJson(const Triple& t) { return Json::array({t[0].str(), t[1].str(), t[2].str()}); }

Triple tripleFrom(const Json& j) {
  return {Permutation::parse(j.at(0).get<std::string>()), Permutation::parse(j.at(1).get<std::string>()),
          Permutation::parse(j.at(2).get<std::string>())};
}

}  // namespace

Json certificateToJson(const Certificate& c) {
  Json j;
  j["kind"] = std::string(certificateKind(c));
  if (auto* s = std::get_if<InfeasibleSubset>(&c)) {
    j["subset"] = rowSetToList(s->subset);
    j["lhs"] = s->lhs;
    j["rhs"] = s->rhs;
  } else if (auto* f = std::get_if<FarkasCertificate>(&c)) {
    j["rows"] = f->rows;
    j["cols"] = f->cols;
    j["upper"] = rationals(f->upper);
    j["content"] = rationals(f->content);
    j["row_bound"] = rationals(f->rowBound);
  } else if (auto* p = std::get_if<RelaxationPoint>(&c)) {
    j["rows"] = p->rows;
    j["cols"] = p->cols;
    j["entries"] = rationals(p->entries);
  } else if (auto* t = std::get_if<Filling>(&c)) {
    j["rows"] = t->diagram.rows();
    j["cols"] = t->diagram.cols();
    Json cells = Json::array();
    for (std::size_t k = 0; k < t->labels.size(); ++k)
      cells.push_back({t->diagram.cells()[k].row, t->diagram.cells()[k].col, t->labels[k]});
    j["cells"] = cells;
  } else if (auto* b = std::get_if<BruhatWitness>(&c)) {
    j["i"] = b->i;
    j["j"] = b->j;
  } else if (auto* d = std::get_if<DescentCyclingWitness>(&c)) {
    j["position"] = d->position;
    Json path = Json::array();
    for (const auto& t : d->path) path.push_back(tripleJson(t));
    j["path"] = path;
  } else if (auto* r = std::get_if<DoomedFilter>(&c)) {
    Json roots = Json::array();
    for (auto [m, q] : r->roots) roots.push_back({m, q});
    j["roots"] = roots;
    j["tokens"] = r->tokens;
  }
  return j;
}

Certificate certificateFromJson(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "subset")
    return InfeasibleSubset{rowSetFromList(j.at("subset").get<std::vector<int>>()), j.at("lhs").get<long>(),
                            j.at("rhs").get<long>()};
  if (kind == "farkas")
    return FarkasCertificate{j.at("rows").get<int>(), j.at("cols").get<int>(), rationalsFrom(j.at("upper")),
                             rationalsFrom(j.at("content")), rationalsFrom(j.at("row_bound"))};
  if (kind == "relaxation_point")
    return RelaxationPoint{j.at("rows").get<int>(), j.at("cols").get<int>(), rationalsFrom(j.at("entries"))};
  if (kind == "filling") {
    std::vector<Cell> cells;
    std::vector<int> labels;
    for (const auto& c : j.at("cells")) {
      cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
      labels.push_back(c.at(2).get<int>());
    }
    return Filling{Diagram(j.at("rows").get<int>(), j.at("cols").get<int>(), cells), labels};
  }
  if (kind == "bruhat_pair") return BruhatWitness{j.at("i").get<int>(), j.at("j").get<int>()};
  if (kind == "dc_path") {
    DescentCyclingWitness d;
    d.position = j.at("position").get<int>();
    for (const auto& t : j.at("path")) d.path.push_back(tripleFrom(t));
    return d;
  }
  if (kind == "doomed_filter") {
    DoomedFilter r;
    for (const auto& x : j.at("roots")) r.roots.emplace_back(x.at(0).get<int>(), x.at(1).get<int>());
    r.tokens = j.at("tokens").get<int>();
    return r;
  }
  throw std::invalid_argument("unknown certificate kind '" + kind + "'");
}

Json toJson(const ResultRecord& r) {
  Json j;
  j["id"] = r.id;
  j["line"] = r.line;
  if (r.error) j["error"] = *r.error;
  if (r.problem) {
    j["mode"] = r.problem->mode == Mode::Symmetric ? "symmetric" : "asymmetric";
    j["factors"] = r.problem->factors;
    j["target"] = r.problem->target ? Json(*r.problem->target) : Json(nullptr);
    j["n"] = r.n;
    Json vs = Json::object();
    for (const auto& name : kTestNames) {
      auto it = r.verdicts.find(name);
      if (it == r.verdicts.end()) continue;
      const TestVerdict& v = it->second;
      Json e;
      e["status"] = v.status;
      if (!v.detail.empty()) e["detail"] = v.detail;
      if (!v.content.empty()) {
        e["content"] = v.content;
        e["compressed"] = v.compressed;
      }
      if (v.certificate) e["certificate"] = certificateToJson(*v.certificate);
      vs[name] = e;
    }
    j["verdicts"] = vs;
    j["oracle"] = r.oracle ? Json(*r.oracle) : Json(nullptr);
  }
  j["elapsed_ms"] = r.elapsedMs;
  return j;
}

ResultRecord resultFromJson(const Json& j) {
  ResultRecord r;
  r.id = j.at("id").get<std::string>();
  r.line = j.at("line").get<int>();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  if (j.contains("mode")) {
    ProblemRecord p;
    p.id = r.id;
    p.line = r.line;
    p.mode = j.at("mode").get<std::string>() == "symmetric" ? Mode::Symmetric : Mode::Asymmetric;
    p.factors = j.at("factors").get<std::vector<std::string>>();
    if (!j.at("target").is_null()) p.target = j.at("target").get<std::string>();
    r.problem = std::move(p);
    r.n = j.at("n").get<int>();
    for (const auto& [name, e] : j.at("verdicts").items()) {
      TestVerdict v;
      v.status = e.at("status").get<std::string>();
      if (e.contains("detail")) v.detail = e.at("detail").get<std::string>();
      if (e.contains("content")) {
        v.content = e.at("content").get<ExponentVector>();
        v.compressed = e.at("compressed").get<bool>();
      }
      if (e.contains("certificate")) v.certificate = certificateFromJson(e.at("certificate"));
      r.verdicts[name] = std::move(v);
    }
    if (!j.at("oracle").is_null()) r.oracle = j.at("oracle").get<std::string>();
  }
  r.elapsedMs = j.at("elapsed_ms").get<double>();
  return r;
}

std::string formatText(const ResultRecord& r) {
  std::ostringstream out;
  out << r.id << ": ";
  if (r.error && !r.problem) {
    out << "error: " << *r.error << '\n';
    return out.str();
  }
  out << formatProblemLine(*r.problem) << "  (n=" << r.n << ")\n";
  if (r.error) out << "  error: " << *r.error << '\n';
  for (const auto& name : kTestNames) {
    auto it = r.verdicts.find(name);
    if (it == r.verdicts.end()) continue;
    out << "  " << std::left << std::setw(22) << name << it->second.status;
    if (it->second.certificate) out << "  [" << certificateKind(*it->second.certificate) << "]";
    if (!it->second.detail.empty()) out << "  " << it->second.detail;
    out << '\n';
  }
  if (r.oracle) out << "  " << std::left << std::setw(22) << "oracle" << *r.oracle << '\n';
  out << "  elapsed_ms " << std::fixed << std::setprecision(3) << r.elapsedMs << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

TestVerdict fromVerdict(Verdict v) {
  return TestVerdict{std::string(outcomeName(v.outcome)), std::move(v.detail), std::move(v.content),
                     v.compressed, std::move(v.certificate)};
}

TestVerdict skipped(std::string why) { return TestVerdict{"SKIPPED", std::move(why), {}, false, std::nullopt}; }

}  // namespace

ResultRecord evaluate(const ProblemRecord& rec, const Options& opt, const SchubertTable* table) {
  const auto start = std::chrono::steady_clock::now();
  ResultRecord r;
  r.id = rec.id;
  r.line = rec.line;
  r.problem = rec;
  try {
    const SchubertProblem p = toProblem(rec);
    r.n = p.n();
    const TestOptions topt{opt.compress};
    const auto sym = p.symmetricFactors();
    auto enabled = [&](const std::string& t) { return opt.tests.count(t) > 0; };

    if (enabled("schubitope_symmetric")) r.verdicts["schubitope_symmetric"] = fromVerdict(symmetricTest(p, topt));
    if (enabled("schubitope_asymmetric"))
      r.verdicts["schubitope_asymmetric"] =
          p.target ? fromVerdict(asymmetricTest(p, topt)) : skipped("symmetric problem");
    if (enabled("flexible")) {
      if (!p.target) r.verdicts["flexible"] = skipped("symmetric problem");
      else if (opt.flexibleSamples <= 0) r.verdicts["flexible"] = skipped("no samples requested");
      else r.verdicts["flexible"] = fromVerdict(randomizedFlexibleTest(p, opt.flexibleSamples, opt.seed, topt));
    } else if (opt.flexibleSamples > 0 && p.target) {
      r.verdicts["flexible"] = fromVerdict(randomizedFlexibleTest(p, opt.flexibleSamples, opt.seed, topt));
    }
    if (enabled("bruhat")) r.verdicts["bruhat"] = fromVerdict(bruhatVanishingTest(sym));
    if (enabled("descent_cycling"))
      r.verdicts["descent_cycling"] =
          sym.size() == 3 ? fromVerdict(dcTest(sym)) : skipped("needs exactly three factors");
    if (enabled("root_game"))
      r.verdicts["root_game"] =
          r.n <= kMaxRootGameSize ? fromVerdict(rootGameTest(sym)) : skipped("rank too large for filter enumeration");

    if (opt.forceOracle || r.n <= opt.oracleMaxN) {
      const OracleValue o = p.target ? asymmetricCoefficient(p.factors, *p.target, table)
                                     : intersectionNumber(p.factors, table);
      r.oracle = o.value.get_str();
    }
  } catch (const std::invalid_argument& e) {
    r.error = std::string("input: ") + e.what();
  } catch (const std::exception& e) {
    r.error = std::string("internal: ") + e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  r.elapsedMs = opt.stable ? 0.0 : std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

int runBatch(std::istream& in, std::ostream& out, std::ostream& err, const Options& opt, Summary* summary) {
  struct Item {
    std::optional<ProblemRecord> problem;
    std::optional<ParseError> parseError;
  };
  std::vector<Item> items;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    try {
      if (auto p = parseProblemLine(text, line)) items.push_back({std::move(p), std::nullopt});
    } catch (const std::exception& e) {
      items.push_back({std::nullopt, ParseError{line, e.what()}});
      err << "line " << line << ": " << e.what() << '\n';
    }
  }

  std::unique_ptr<SchubertTable> table;
  const int tableN = std::min(opt.oracleMaxN, 6);
  if (tableN >= 1) table = std::make_unique<SchubertTable>(tableN);

  std::vector<ResultRecord> results(items.size());
  kernels::parallelFor(
      items.size(), kernels::Exec::Parallel,
      [&](std::size_t k) {
        if (items[k].problem) {
          results[k] = evaluate(*items[k].problem, opt, table.get());
        } else {
          const auto& pe = *items[k].parseError;
          results[k].id = "L" + std::to_string(pe.line);
          results[k].line = pe.line;
          results[k].error = "input: " + pe.message;
        }
      },
      opt.threads);

  Summary s;
  for (const auto& r : results) {
    ++s.problems;
    if (!r.problem || (r.error && r.error->rfind("input:", 0) == 0)) ++s.parseErrors;
    else if (r.error) ++s.internalErrors;
    if (opt.format == Format::JsonLines) out << toJson(r).dump() << '\n';
    else out << formatText(r);
  }
  if (summary) *summary = s;
  if (s.parseErrors) return 2;
  if (s.internalErrors) return 1;
  return 0;
}

}  // namespace schubvan::batch
