#pragma once

#include <cstddef>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "flcalc/calculus.hpp"
#include "flcalc/formula.hpp"

namespace oracle {

using flcalc::Formula;
using flcalc::FormulaList;
using flcalc::Sequent;
using flcalc::System;

// Forward closure of the cut-free rules. Starting from the axioms, rules are
// applied premises-to-conclusion over sequents whose formulas all lie in
// `formulas` and whose size is at most `bound`. Rule shapes are written out
// here from the rule tables and share no code with the library's matcher.
class Saturation {
public:
  Saturation(System sys, FormulaList formulas, std::size_t bound);

  auto derivable(const Sequent& s) const -> bool { return derived_.contains(s); }
  auto derivedCount() const noexcept -> std::size_t { return derived_.size(); }

private:
  void run();
  void add(Sequent s);
  void unary(const Sequent& p);
  void binary(const Sequent& p, const Sequent& q);
  void withIndexed(const Sequent& p);
  auto in(const Formula& f) const -> bool { return members_.contains(f); }
  auto fits(const Sequent& s) const -> bool { return s.size() <= bound_; }
  // Every list over the formula set of total size at most `budget`.
  auto lists(std::size_t budget) const -> std::vector<FormulaList>;

  System sys_;
  FormulaList formulas_; // sorted by size
  std::unordered_set<Formula, flcalc::FormulaHash> members_;
  std::size_t bound_;

  std::unordered_set<Sequent, flcalc::SequentHash> derived_;
  std::vector<std::vector<Sequent>> pending_; // by size
  std::vector<std::vector<Sequent>> done_;    // by size

  // Sequents with a succedent, keyed by antecedent (for andR).
  std::unordered_map<Sequent, std::vector<Formula>, flcalc::SequentHash> byAntecedent_;
  // Sequents with one antecedent slot blanked, keyed by the rest (for orL).
  struct Hole {
    Sequent rest;
    std::size_t at;
    friend auto operator==(const Hole&, const Hole&) -> bool = default;
  };
  struct HoleHash {
    auto operator()(const Hole& h) const noexcept -> std::size_t { return h.rest.hash() * 131 + h.at; }
  };
  std::unordered_map<Hole, std::vector<Formula>, HoleHash> byHole_;
};

// Every formula over `atoms` and the four constants with size <= maxSize,
// ordered by size.
auto allFormulas(const std::vector<std::string>& atoms, std::size_t maxSize) -> FormulaList;

// Every sequent over `formulas` with size <= bound.
auto allSequents(const FormulaList& formulas, std::size_t bound) -> std::vector<Sequent>;

// The per-goal oracle: close the sequents of size <= size(goal) over the
// subformulas of goal and test membership.
auto derivableByClosure(System sys, const Sequent& goal) -> bool;

} // namespace oracle
