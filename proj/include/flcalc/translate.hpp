#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flcalc/calculus.hpp"
#include "flcalc/formula.hpp"

namespace flcalc {

class TranslationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// How a displaced left context Gamma1 = a1, ..., an is folded into the cut
// formula. Tensor: (((a1 * a2) * ...) * an) -> C, one cut per node. Curried:
// an -> (... -> (a1 -> C)), n cuts per node.
enum class CurryStrategy { Tensor, Curried };

auto parseCurryStrategy(std::string_view text) -> CurryStrategy;

struct TranslateOptions {
  CurryStrategy strategy = CurryStrategy::Tensor;
  // Keep connectives and rule names as they are instead of applying the
  // implication/negation swap. The output is then generally not a valid
  // restricted proof; this mode exists to exhibit that.
  bool literal = false;
};

struct TranslationCase {
  std::vector<std::size_t> path;
  std::string name;
};

struct TranslationTrace {
  ProofTree output;
  std::size_t cutsIntroduced = 0;
  std::vector<TranslationCase> casesApplied;
};

// Rule relabelling that accompanies the symbol swap: impL<->coimpL,
// impR<->coimpR, negL<->conegL, negR<->conegR.
auto swapRuleLabel(Rule r) noexcept -> Rule;
auto swapRuleLabel(std::string_view rule) -> std::string;

// Cut formula replacing the context: [] -> goal, [a1] -> a1 -> goal,
// otherwise the left-nested tensor of the context implies goal. With no goal
// the implication becomes a left negation of the folded context.
auto curryContext(const FormulaList& ctx, const Formula& goal,
                  CurryStrategy strategy = CurryStrategy::Tensor) -> Formula;
auto curryContext(const FormulaList& ctx, const std::optional<Formula>& goal, CurryStrategy strategy) -> Formula;

// Restricted, cut-free (tensor) proof of  ctx, curryContext(ctx, goal) |- goal.
// Throws TranslationError for an empty context.
auto contextGadget(const FormulaList& ctx, const Formula& goal,
                   CurryStrategy strategy = CurryStrategy::Tensor) -> ProofTree;
auto contextGadget(const FormulaList& ctx, const std::optional<Formula>& goal, CurryStrategy strategy) -> ProofTree;

// Restricted proof -> FL proof of the swapped conclusion, node for node.
auto embedToFL(const ProofTree& p) -> ProofTree;

// FL proof -> restricted proof of the swapped conclusion, introducing a cut
// against a context gadget wherever a left rule has context the restricted
// system forbids.
auto translateToFLPrime(const ProofTree& p, const TranslateOptions& options = {}) -> TranslationTrace;

} // namespace flcalc
