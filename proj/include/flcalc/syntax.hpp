#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "flcalc/calculus.hpp"
#include "flcalc/formula.hpp"

namespace flcalc {

// Parse failure with a 1-based source position.
class SourceError : public std::runtime_error {
public:
  SourceError(std::size_t line, std::size_t column, std::string expected);

  auto line() const noexcept -> std::size_t { return line_; }
  auto column() const noexcept -> std::size_t { return column_; }
  auto expected() const noexcept -> const std::string& { return expected_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

// Concrete grammar (loosest first):
//
//   formula  := coimps ( "->" formula )?          right-associative
//   coimps   := disj ( "<-" disj )*               left-associative
//   disj     := conj ( "\/" conj )*
//   conj     := tensor ( "/\" tensor )*
//   tensor   := prefix ( "*" prefix )*
//   prefix   := "neg" prefix | "coneg" prefix | atom | "1" | "0" | "top" | "bot" | "(" formula ")"
//
// Binary operators other than "->" associate to the left. In a chain mixing
// the two implications, "<-" groups first. Unicode aliases are accepted on
// input: ⊗ ∧ ∨ → ← ¬ ¬′ ⊤ ⊥ ⊢.
auto parseFormula(std::string_view text) -> Formula;
auto printFormula(const Formula& f) -> std::string;

// "F1, F2, ... |- G" with either side possibly empty.
auto parseSequent(std::string_view text) -> Sequent;
auto printSequent(const Sequent& s) -> std::string;

// Indented proof text: one "<rule> : <sequent>" per line, children two spaces
// deeper than their parent, premises in order. Blank lines and lines starting
// with '#' are ignored.
auto parseProof(std::string_view text) -> ProofTree;
auto printProof(const ProofTree& p) -> std::string;

// Machine format: nested objects {"rule", "sequent", "premises"}.
auto parseProofJson(std::string_view text) -> ProofTree;
auto printProofJson(const ProofTree& p, int indent = 2) -> std::string;

// Nested \infer[label]{conclusion}{premises}; zero-premise nodes print bare.
auto emitLatex(const ProofTree& p) -> std::string;
auto latexFormula(const Formula& f) -> std::string;
auto latexSequent(const Sequent& s) -> std::string;
auto latexRuleLabel(std::string_view rule) -> std::string;

} // namespace flcalc
