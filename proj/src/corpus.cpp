#include "flcalc/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "flcalc/syntax.hpp"

namespace flcalc {

namespace {

auto readFile(const std::filesystem::path& p) -> std::optional<std::string> {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

auto splitTabs(const std::string& line) -> std::vector<std::string> {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos)
      return out;
    start = tab + 1;
  }
}

auto dataLines(const std::string& text) -> std::vector<std::pair<std::size_t, std::string>> {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty() || line.front() == '#')
      continue;
    out.emplace_back(n, line);
  }
  return out;
}

auto parseVerdict(const std::string& s) -> std::optional<Verdict> {
  if (s == "Accepted")
    return Verdict::Accepted;
  if (s == "Rejected")
    return Verdict::Rejected;
  return std::nullopt;
}

} // namespace

auto loadManifest(const std::filesystem::path& dir) -> std::vector<CorpusEntry> {
  const auto text = readFile(dir / "manifest");
  if (!text)
    throw CorpusError("no entries found: missing manifest in " + dir.string());

  std::map<std::string, std::vector<std::string>> errata;
  if (auto e = readFile(dir / "errata")) {
    for (const auto& [n, line] : dataLines(*e)) {
      auto cols = splitTabs(line);
      if (cols.size() != 2)
        throw CorpusError("errata line " + std::to_string(n) + ": expected 'id<TAB>note'");
      errata[cols[0]].push_back(cols[1]);
    }
  }

  std::vector<CorpusEntry> out;
  for (const auto& [n, line] : dataLines(*text)) {
    auto cols = splitTabs(line);
    if (cols.size() != 4)
      throw CorpusError("manifest line " + std::to_string(n) + ": expected 4 tab-separated fields");
    CorpusEntry e;
    e.id = cols[0];
    try {
      e.system = parseSystem(cols[1]);
    } catch (const std::invalid_argument& ex) {
      throw CorpusError("entry " + e.id + ": " + ex.what());
    }
    auto v = parseVerdict(cols[2]);
    if (!v)
      throw CorpusError("entry " + e.id + ": expected verdict must be Accepted or Rejected");
    e.expected = *v;
    e.figure = cols[3];
    e.file = dir / (e.id + ".proof");
    if (auto it = errata.find(e.id); it != errata.end())
      e.errata = it->second;
    out.push_back(std::move(e));
  }
  if (out.empty())
    throw CorpusError("no entries found in " + dir.string());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

auto CorpusReport::ok() const noexcept -> bool {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok; }) &&
         std::all_of(matrix.begin(), matrix.end(), [](const auto& c) { return c.ok(); });
}

auto derivabilityMatrix() -> std::vector<MatrixCell> {
  using enum SearchStatus;
  return {
      {"A*(B*C) |- (A*B)*C", System::FL, Provable, Unprovable},
      {"A*(B*C) |- (A*B)*C", System::FLPrime, Unprovable, Unprovable},
      {"(A*B)*C |- A*(B*C)", System::FL, Provable, Unprovable},
      {"(A*B)*C |- A*(B*C)", System::FLPrime, Provable, Unprovable},
      {"A*(B\\/C) |- (A*B)\\/(A*C)", System::FL, Provable, Unprovable},
      {"A*(B\\/C) |- (A*B)\\/(A*C)", System::FLPrime, Unprovable, Unprovable},
      {"(A*B)\\/(A*C) |- A*(B\\/C)", System::FL, Provable, Unprovable},
      {"(A*B)\\/(A*C) |- A*(B\\/C)", System::FLPrime, Provable, Unprovable},
  };
}

auto runCorpus(const std::filesystem::path& dir) -> CorpusReport {
  CorpusReport report;
  for (auto& e : loadManifest(dir)) {
    const auto text = readFile(e.file);
    if (!text)
      throw CorpusError("entry " + e.id + ": missing proof file " + e.file.string());
    ProofTree proof;
    try {
      proof = parseProof(*text);
    } catch (const SourceError& ex) {
      throw CorpusError("entry " + e.id + ": " + ex.what());
    }
    CheckReport check = checkProof(e.system, proof);
    EntryResult r{std::move(e), std::move(check), false};
    r.ok = r.report.verdict == r.entry.expected;
    report.entries.push_back(std::move(r));
  }
  report.matrix = derivabilityMatrix();
  for (auto& cell : report.matrix) {
    const auto start = std::chrono::steady_clock::now();
    cell.actual = decideCutFree(cell.system, parseSequent(cell.sequent)).status;
    cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

void printReport(const CorpusReport& report, std::ostream& out) {
  auto verdict = [](Verdict v) { return v == Verdict::Accepted ? "Accepted" : "Rejected"; };
  for (const auto& r : report.entries) {
    out << (r.ok ? "PASS " : "FAIL ") << r.entry.id << " [" << systemName(r.entry.system) << "] "
        << verdict(r.report.verdict) << " (expected " << verdict(r.entry.expected) << ")";
    if (!r.report.accepted() && r.report.offending)
      out << " at '" << printSequent(*r.report.offending) << "': " << r.report.message;
    out << "\n";
  }
  for (const auto& c : report.matrix) {
    out << (c.ok() ? "PASS " : "FAIL ") << "matrix " << systemName(c.system) << " " << c.sequent << " : "
        << searchStatusName(c.actual) << " (expected " << searchStatusName(c.expected) << ")\n";
  }
  out << (report.ok() ? "corpus OK" : "corpus FAILED") << "\n";
}

} // namespace flcalc
