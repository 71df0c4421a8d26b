// flcalc: command-line front end for the two Lambek sequent calculi.
//
// Exit codes: 0 valid/provable, 1 invalid/unprovable, 2 usage or parse error,
// 3 resource bound exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "flcalc/corpus.hpp"
#include "flcalc/search.hpp"
#include "flcalc/syntax.hpp"
#include "flcalc/translate.hpp"

#ifndef FLCALC_CORPUS_DIR
#define FLCALC_CORPUS_DIR "corpus"
#endif

namespace {

using namespace flcalc;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kExceeded = 3;

auto slurp(const std::string& path) -> std::string {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << text;
}

auto isJsonPath(const std::string& path) -> bool { return path.ends_with(".json"); }

auto loadProof(const std::string& path) -> ProofTree {
  const auto text = slurp(path);
  return isJsonPath(path) ? parseProofJson(text) : parseProof(text);
}

auto renderProof(const ProofTree& p, bool json) -> std::string {
  return json ? printProofJson(p) : printProof(p);
}

auto describePath(const std::vector<std::size_t>& path) -> std::string {
  std::string out = "root";
  for (auto i : path)
    out += "." + std::to_string(i);
  return out;
}

// One formula per line; blank lines and '#' comments ignored.
auto loadPool(const std::string& path) -> FormulaList {
  FormulaList out;
  std::istringstream in(slurp(path));
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    try {
      out.push_back(parseFormula(line));
    } catch (const SourceError& e) {
      throw SourceError(n, e.column(), e.expected());
    }
  }
  return out;
}

auto reportCheck(System sys, const ProofTree& p) -> int {
  const auto r = checkProof(sys, p);
  if (r.accepted()) {
    std::cout << "Accepted under " << systemName(sys) << "\n";
    return kOk;
  }
  std::cout << "Rejected under " << systemName(sys) << " at " << describePath(r.path);
  if (r.offending)
    std::cout << " '" << printSequent(*r.offending) << "'";
  std::cout << ": " << r.message << "\n";
  return kNo;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequent calculi FL and FL': proof checking, search and translation"};
  app.require_subcommand(1);

  std::string system = "fl";
  std::string file;
  bool json = false;

  auto* check = app.add_subcommand("check", "Check a proof file under a system");
  check->add_option("--system", system, "fl or flp")->required()->check(CLI::IsMember({"fl", "flp"}));
  check->add_option("FILE", file, "proof file (.proof or .proof.json)")->required();

  std::string goal;
  std::string poolFile;
  std::size_t depth = 0;
  std::string emitFile;
  std::string latexFile;
  auto* search = app.add_subcommand("search", "Search for a proof of a sequent");
  search->add_option("--system", system, "fl or flp")->required()->check(CLI::IsMember({"fl", "flp"}));
  search->add_option("SEQUENT", goal, "goal sequent, e.g. \"A*(B*C) |- (A*B)*C\"")->required();
  auto* poolOpt = search->add_option("--cut-pool", poolFile, "file of cut formulas, one per line");
  search->add_option("--depth", depth, "maximum proof height when cuts are allowed")->needs(poolOpt);
  search->add_option("--emit", emitFile, "write the proof found to FILE");
  search->add_option("--latex", latexFile, "write the proof found as LaTeX to FILE");
  search->add_flag("--json", json, "print and emit proofs in the JSON format");

  std::string target = "flp";
  std::string strategy = "tensor";
  bool literal = false;
  auto* translate = app.add_subcommand("translate", "Translate a proof between the systems");
  translate->add_option("--to", target, "flp (from an FL proof) or fl (from an FL' proof)")
      ->required()
      ->check(CLI::IsMember({"fl", "flp"}));
  translate->add_option("FILE", file, "proof file")->required();
  translate->add_option("--strategy", strategy, "tensor or curried")->check(CLI::IsMember({"tensor", "curried"}));
  translate->add_flag("--literal", literal, "do not swap implications and negations");
  translate->add_flag("--json", json, "print the result in the JSON format");

  auto* embed = app.add_subcommand("embed", "Embed an FL' proof into FL");
  embed->add_option("FILE", file, "proof file")->required();
  embed->add_flag("--json", json, "print the result in the JSON format");

  std::string corpusDir = FLCALC_CORPUS_DIR;
  auto* corpus = app.add_subcommand("corpus", "Regression corpus");
  corpus->require_subcommand(1);
  auto* corpusRun = corpus->add_subcommand("run", "Check every corpus entry and the derivability matrix");
  corpusRun->add_option("--dir", corpusDir, "corpus directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed())
      return reportCheck(parseSystem(system), loadProof(file));

    if (search->parsed()) {
      const System sys = parseSystem(system);
      const Sequent s = parseSequent(goal);
      SearchOutcome outcome;
      if (poolOpt->count() > 0) {
        CutBudget budget{loadPool(poolFile), depth == 0 ? s.size() : depth};
        outcome = searchWithCuts(sys, s, budget);
      } else {
        outcome = decideCutFree(sys, s);
      }
      std::cout << searchStatusName(outcome.status);
      if (!outcome.limit.empty())
        std::cout << " (" << outcome.limit << ")";
      std::cout << "\n";
      if (!outcome.provable())
        return outcome.status == SearchStatus::ResourceExceeded ? kExceeded : kNo;
      std::cout << renderProof(*outcome.witness, json);
      if (!emitFile.empty())
        spit(emitFile, renderProof(*outcome.witness, json || isJsonPath(emitFile)));
      if (!latexFile.empty())
        spit(latexFile, emitLatex(*outcome.witness) + "\n");
      return kOk;
    }

    if (translate->parsed() || embed->parsed()) {
      const ProofTree p = loadProof(file);
      if (embed->parsed() || target == "fl") {
        const auto r = checkProof(System::FLPrime, p);
        if (!r.accepted())
          return reportCheck(System::FLPrime, p);
        std::cout << renderProof(embedToFL(p), json);
        return kOk;
      }
      if (const auto r = checkProof(System::FL, p); !r.accepted())
        return reportCheck(System::FL, p);
      const auto trace = translateToFLPrime(p, TranslateOptions{parseCurryStrategy(strategy), literal});
      std::cout << renderProof(trace.output, json);
      std::cerr << "cuts introduced: " << trace.cutsIntroduced << "\n";
      const auto verdict = checkProof(System::FLPrime, trace.output);
      if (!verdict.accepted()) {
        std::cerr << "output rejected under FLPrime at '" << printSequent(*verdict.offending)
                  << "': " << verdict.message << "\n";
        return kNo;
      }
      return kOk;
    }

    if (corpusRun->parsed()) {
      const auto report = runCorpus(corpusDir);
      printReport(report, std::cout);
      return report.ok() ? kOk : kNo;
    }
  } catch (const SourceError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CorpusError& e) {
    std::cerr << "corpus error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
