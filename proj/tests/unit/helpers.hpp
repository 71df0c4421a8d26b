#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "flcalc/syntax.hpp"

namespace unit {

inline auto slurp(const std::filesystem::path& p) -> std::string {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline auto corpusProof(const std::string& id) -> flcalc::ProofTree {
  return flcalc::parseProof(slurp(std::filesystem::path(FLCALC_CORPUS_DIR) / (id + ".proof")));
}

inline auto F(std::string_view s) -> flcalc::Formula { return flcalc::parseFormula(s); }
inline auto S(std::string_view s) -> flcalc::Sequent { return flcalc::parseSequent(s); }

constexpr std::uint32_t kSeed = 7919;
constexpr std::size_t kCases = 1000;

} // namespace unit
