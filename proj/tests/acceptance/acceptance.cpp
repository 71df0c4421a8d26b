// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Details for each criterion are printed indented beneath it.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "flcalc/corpus.hpp"
#include "flcalc/search.hpp"
#include "flcalc/syntax.hpp"
#include "flcalc/translate.hpp"
#include "properties.hpp"
#include "saturation.hpp"

#ifndef FLCALC_CORPUS_DIR
#error "FLCALC_CORPUS_DIR must be defined"
#endif
#ifndef FLCALC_FIXTURES_DIR
#error "FLCALC_FIXTURES_DIR must be defined"
#endif

namespace fs = std::filesystem;
using namespace flcalc;

namespace {

using Clock = std::chrono::steady_clock;

auto seconds(Clock::time_point since) -> double {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

auto readProof(const fs::path& p) -> ProofTree {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parseProof(ss.str());
}

struct Criterion {
  int number;
  std::string title;
  std::function<bool(std::ostream&)> run;
};

auto matrixCells(std::ostream& log) -> bool {
  bool ok = true;
  for (const auto& cell : flcalc::derivabilityMatrix()) {
    const auto start = Clock::now();
    const auto out = decideCutFree(cell.system, parseSequent(cell.sequent));
    const double t = seconds(start);
    const bool witnessOk = !out.provable() || checkProof(cell.system, *out.witness).accepted();
    const bool good = out.status == cell.expected && t < 1.0 && witnessOk;
    ok = ok && good;
    log << "    " << (good ? "ok  " : "BAD ") << systemName(cell.system) << " " << cell.sequent << " -> "
        << searchStatusName(out.status) << " in " << t << "s\n";
  }
  return ok;
}

auto withCutRecovery(std::ostream& log) -> bool {
  struct Case {
    const char* goal;
    const char* pool;
  };
  bool ok = true;
  for (const Case c : {Case{"A*(B*C) |- (A*B)*C", "A -> (A*B)*C"},
                       Case{"A*(B\\/C) |- (A*B)\\/(A*C)", "A -> ((A*B) \\/ (A*C))"}}) {
    const Sequent goal = parseSequent(c.goal);
    const auto start = Clock::now();
    const auto out = searchWithCuts(System::FLPrime, goal, CutBudget{{parseFormula(c.pool)}, 12});
    const double t = seconds(start);
    const bool good = out.provable() && checkProof(System::FLPrime, *out.witness).accepted() &&
                      out.witness->conclusion == goal && out.witness->height() <= 12 && t < 5.0;
    ok = ok && good;
    log << "    " << (good ? "ok  " : "BAD ") << c.goal << " with pool {" << c.pool << "} -> "
        << searchStatusName(out.status);
    if (out.provable())
      log << ", height " << out.witness->height() << ", " << out.witness->countRule("cut") << " cut";
    log << " in " << t << "s\n";
  }
  return ok;
}

auto corpusAndMutations(std::ostream& log) -> bool {
  const auto report = runCorpus(FLCALC_CORPUS_DIR);
  std::size_t passed = 0;
  for (const auto& e : report.entries) {
    passed += e.ok && e.report.accepted();
    if (!e.ok)
      log << "    BAD entry " << e.entry.id << ": " << e.report.message << "\n";
  }
  log << "    " << passed << "/" << report.entries.size() << " corpus entries Accepted\n";
  bool ok = passed == report.entries.size() && passed >= 12;

  const fs::path dir = fs::path(FLCALC_FIXTURES_DIR) / "mutations";
  std::ifstream systems(dir / "systems");
  std::string id;
  std::string sys;
  std::size_t rejected = 0;
  std::size_t total = 0;
  while (systems >> id >> sys) {
    ++total;
    const auto r = checkProof(parseSystem(sys), readProof(dir / (id + ".proof")));
    rejected += !r.accepted();
    log << "    " << (r.accepted() ? "BAD " : "ok  ") << "mutation " << id << ": "
        << (r.accepted() ? "Accepted" : "Rejected (" + r.message + ")") << "\n";
  }
  return ok && total == 3 && rejected == 3;
}

auto embedding(std::ostream& log) -> bool {
  const auto sigma = SymbolMap::sigma();
  std::size_t n = 0;
  bool ok = true;
  for (const auto& e : loadManifest(FLCALC_CORPUS_DIR)) {
    if (e.system != System::FLPrime)
      continue;
    const ProofTree p = readProof(e.file);
    const ProofTree q = embedToFL(p);
    const bool good = checkProof(System::FL, q).accepted() && q.conclusion == applySymbolMap(sigma, p.conclusion);
    ok = ok && good;
    ++n;
    if (!good)
      log << "    BAD " << e.id << "\n";
  }
  log << "    " << n << " restricted corpus proofs embedded\n";
  return ok && n > 0;
}

auto translation(std::ostream& log) -> bool {
  bool ok = true;
  std::size_t n = 0;
  for (const auto& e : loadManifest(FLCALC_CORPUS_DIR)) {
    if (e.system != System::FL)
      continue;
    ++n;
    const ProofTree p = readProof(e.file);
    const std::size_t needed = testsupport::nodesNeedingCut(p);
    for (auto strategy : {CurryStrategy::Tensor, CurryStrategy::Curried}) {
      const auto t = translateToFLPrime(p, TranslateOptions{strategy, false});
      const bool accepted = checkProof(System::FLPrime, t.output).accepted();
      const bool count = strategy == CurryStrategy::Curried || t.cutsIntroduced == needed;
      const bool good = accepted && count;
      ok = ok && good;
      log << "    " << (good ? "ok  " : "BAD ") << e.id << " ["
          << (strategy == CurryStrategy::Tensor ? "tensor" : "curried") << "] "
          << (accepted ? "Accepted" : "Rejected") << ", " << t.cutsIntroduced << " cut(s) introduced, "
          << needed << " node(s) with displaced context\n";
    }
  }
  return ok && n >= 2;
}

auto oracleEquivalence(std::ostream& log) -> bool {
  const auto start = Clock::now();
  constexpr std::size_t kBound = 7;
  const auto formulas = oracle::allFormulas({"A", "B"}, kBound - 1);
  const auto universe = oracle::allSequents(formulas, kBound);
  log << "    " << formulas.size() << " formulas, " << universe.size() << " sequents of size <= " << kBound << "\n";
  bool ok = true;
  for (System sys : {System::FL, System::FLPrime}) {
    const auto t0 = Clock::now();
    oracle::Saturation sat(sys, formulas, kBound);
    std::size_t provable = 0;
    std::size_t disagreements = 0;
    for (const auto& s : universe) {
      const bool byOracle = sat.derivable(s);
      const bool bySearch = decideCutFree(sys, s).provable();
      provable += bySearch;
      if (byOracle != bySearch && disagreements++ < 5)
        log << "    BAD " << systemName(sys) << " " << printSequent(s) << ": oracle " << byOracle << ", search "
            << bySearch << "\n";
    }
    ok = ok && disagreements == 0;
    log << "    " << systemName(sys) << ": " << provable << " provable, " << disagreements << " disagreement(s), "
        << seconds(t0) << "s\n";
  }

  // Per-goal closure over each goal's own subformulas, on every 4999th
  // sequent and on the matrix goals.
  std::size_t sampled = 0;
  std::size_t sampleDisagreements = 0;
  std::vector<Sequent> sample;
  for (std::size_t i = 0; i < universe.size(); i += 4999)
    sample.push_back(universe[i]);
  for (const auto& cell : flcalc::derivabilityMatrix())
    sample.push_back(parseSequent(cell.sequent));
  for (const auto& s : sample)
    for (System sys : {System::FL, System::FLPrime}) {
      ++sampled;
      if (oracle::derivableByClosure(sys, s) != decideCutFree(sys, s).provable()) {
        ++sampleDisagreements;
        log << "    BAD closure " << systemName(sys) << " " << printSequent(s) << "\n";
      }
    }
  log << "    per-goal closure: " << sampled << " checks, " << sampleDisagreements << " disagreement(s)\n";

  const double t = seconds(start);
  log << "    total " << t << "s\n";
  return ok && sampleDisagreements == 0 && t < 300.0;
}

auto properties(std::ostream& log) -> bool {
  constexpr std::uint32_t kSeed = 20240601;
  constexpr std::size_t kCases = 1000;
  bool ok = true;
  for (const auto& r :
       {testsupport::parsePrintFormulas(kSeed, kCases), testsupport::parsePrintSequents(kSeed, kCases),
        testsupport::parsePrintProofs(kSeed, kCases), testsupport::strictDescent(kSeed, kCases),
        testsupport::subformulaProperty(kSeed, kCases), testsupport::sigmaInvolution(kSeed, kCases),
        testsupport::witnessSoundness(kSeed, kCases)}) {
    const bool good = r.ok(kCases);
    ok = ok && good;
    log << "    " << (good ? "ok  " : "BAD ") << r.name << ": " << r.cases << " cases, " << r.failures
        << " failure(s)";
    if (!r.firstFailure.empty())
      log << " (first: " << r.firstFailure << ")";
    log << "\n";
  }
  return ok;
}

auto sigmaProbe(std::ostream& log) -> bool {
  struct Probe {
    const char* goal;
    System sys;
    SearchStatus expected;
  };
  bool ok = true;
  for (const Probe p : {Probe{"A -> B, A |- B", System::FL, SearchStatus::Provable},
                        Probe{"A -> B, A |- B", System::FLPrime, SearchStatus::Unprovable},
                        Probe{"A <- B, A |- B", System::FLPrime, SearchStatus::Provable}}) {
    const auto out = decideCutFree(p.sys, parseSequent(p.goal));
    const bool good = out.status == p.expected;
    ok = ok && good;
    log << "    " << (good ? "ok  " : "BAD ") << systemName(p.sys) << " " << p.goal << " -> "
        << searchStatusName(out.status) << "\n";
  }
  return ok;
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cut-free derivability matrix", matrixCells},
      {2, "with-cut recovery in the restricted system", withCutRecovery},
      {3, "corpus accepted, mutations rejected", corpusAndMutations},
      {4, "embedding of restricted corpus proofs", embedding},
      {5, "translation of FL corpus proofs", translation},
      {6, "forward-saturation oracle agreement", oracleEquivalence},
      {7, "randomized properties", properties},
      {8, "implication-direction probe", sigmaProbe},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log << "    exception: " << e.what() << "\n";
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << "\n" << log.str();
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion/criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
