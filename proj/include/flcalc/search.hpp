#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "flcalc/calculus.hpp"
#include "flcalc/formula.hpp"

namespace flcalc {

enum class SearchStatus { Provable, Unprovable, ResourceExceeded };

auto searchStatusName(SearchStatus s) -> std::string_view;

struct SearchOutcome {
  SearchStatus status = SearchStatus::Unprovable;
  std::optional<ProofTree> witness; // set iff Provable
  std::string limit;                // set iff ResourceExceeded

  auto provable() const noexcept -> bool { return status == SearchStatus::Provable; }
};

struct CutBudget {
  FormulaList pool;
  // Maximum proof height, leaves included.
  std::size_t depth = 1;
  // Discard subgoals whose image in FL has no cut-free proof. FL admits cut
  // and every restricted proof maps into FL, so such subgoals have no proof
  // with any cuts at all.
  bool refuteViaFL = true;
};

// Order in which backward search tries rules: axioms, unary right rules, unary
// left rules, then branching rules.
auto searchOrder() -> std::span<const Rule>;

// Exhaustive cut-free backward search with a per-instance memo. Sequent
// verdicts are a function of the sequent alone, so one prover may be reused
// across goals.
class CutFreeProver {
public:
  explicit CutFreeProver(System sys) : sys_(sys) {}

  auto system() const noexcept -> System { return sys_; }
  auto provable(const Sequent& goal) -> bool;
  auto prove(const Sequent& goal) -> std::optional<ProofTree>;
  auto memoSize() const noexcept -> std::size_t { return memo_.size(); }

private:
  struct Entry {
    bool proved = false;
    Rule rule{};
    std::vector<Sequent> premises;
  };

  auto build(const Sequent& s) const -> ProofTree;

  System sys_;
  std::unordered_map<Sequent, Entry, SequentHash> memo_;
};

// Provable(witness) or Unprovable; never ResourceExceeded.
auto decideCutFree(System sys, const Sequent& goal) -> SearchOutcome;

// Backward search that additionally tries cut on every pool formula at every
// antecedent split, bounded by budget.depth. Witnesses have minimal height.
// Throws std::invalid_argument for depth 0.
auto searchWithCuts(System sys, const Sequent& goal, const CutBudget& budget) -> SearchOutcome;

} // namespace flcalc
