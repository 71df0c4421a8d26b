#pragma once

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "flcalc/calculus.hpp"
#include "flcalc/search.hpp"

namespace flcalc {

class CorpusError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CorpusEntry {
  std::string id;
  System system = System::FL;
  std::filesystem::path file;
  Verdict expected = Verdict::Accepted;
  std::string figure;
  std::vector<std::string> errata;
};

// Reads <dir>/manifest (tab-separated: id, system, expected verdict, figure)
// and the optional <dir>/errata (tab-separated: id, note). Throws CorpusError
// when the manifest is missing, malformed or lists no entries.
auto loadManifest(const std::filesystem::path& dir) -> std::vector<CorpusEntry>;

struct EntryResult {
  CorpusEntry entry;
  CheckReport report;
  bool ok = false;
};

struct MatrixCell {
  std::string sequent;
  System system;
  SearchStatus expected;
  SearchStatus actual;
  double seconds = 0;
  auto ok() const noexcept -> bool { return expected == actual; }
};

struct CorpusReport {
  std::vector<EntryResult> entries;
  std::vector<MatrixCell> matrix;
  auto ok() const noexcept -> bool;
};

// Cut-free derivability of the associativity and distributivity laws in both
// systems, with the expected verdicts.
auto derivabilityMatrix() -> std::vector<MatrixCell>;

// Checks every entry under its declared system and re-derives the matrix.
// Throws CorpusError naming the entry when a proof file is missing or
// unparsable.
auto runCorpus(const std::filesystem::path& dir) -> CorpusReport;

void printReport(const CorpusReport& report, std::ostream& out);

} // namespace flcalc
