#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flcalc/formula.hpp"

namespace flcalc {

// FL is the context-parametrised calculus; FLPrime restricts left rules so the
// principal formula sits at the edge of the antecedent.
enum class System { FL, FLPrime };

auto systemName(System s) -> std::string_view;          // "FL" / "FLPrime"
auto parseSystem(std::string_view text) -> System;      // accepts fl, flp, FL, FLPrime, ...

// Rule vocabulary shared by both systems (same names, different shapes).
enum class Rule : std::uint8_t {
  Id, OneR, ZeroL, TopR, BotL,
  OneW, ZeroW, Cut,
  ImpL, ImpR, CoImpL, CoImpR,
  NegL, NegR, CoNegL, CoNegR,
  TensL, TensR,
  AndL1, AndL2, AndR,
  OrL, OrR1, OrR2,
};

inline constexpr std::size_t kRuleCount = 24;

auto ruleName(Rule r) -> std::string_view;
auto ruleFromName(std::string_view name) -> std::optional<Rule>;
auto ruleArity(Rule r) noexcept -> std::size_t;
auto isAxiom(Rule r) noexcept -> bool;

struct UnknownRule : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// One backward instantiation of a schema against a conclusion.
//
// `position` is the antecedent index of the principal formula for left rules
// (npos for right rules and axioms without one). `contexts` hold the schema's
// context parameters in the order the rule table names them: for FL left
// rules {Gamma1, Gamma2}; for FL impL/coimpL {Gamma1, Gamma2, Gamma3}; for the
// restricted system the single Gamma (or Gamma1, Gamma2 for the implications).
struct RuleMatch {
  Rule rule;
  std::vector<Sequent> premises;
  std::size_t position = npos;
  std::vector<FormulaList> contexts;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct RuleSchema {
  Rule rule;
  System system;
  std::size_t arity;
  // Pretty rendering of the shape, e.g. "G1, A*B, G2 |- C / G1, A, B, G2 |- C".
  std::string_view shape;

  auto name() const -> std::string_view { return ruleName(rule); }
  // All instantiations concluding `conclusion`; empty for cut.
  auto match(const Sequent& conclusion) const -> std::vector<RuleMatch>;
};

// The full, fixed rule table of a system in table order.
auto ruleSchemas(System sys) -> std::span<const RuleSchema>;

auto matchRule(System sys, Rule rule, const Sequent& conclusion) -> std::vector<RuleMatch>;

// Premise lists P such that (P / conclusion) instantiates the schema. Cut
// yields the empty set by contract. Throws UnknownRule for unknown names.
auto premiseCandidates(System sys, std::string_view rule, const Sequent& conclusion)
    -> std::vector<std::vector<Sequent>>;

struct ProofTree {
  std::string rule;
  Sequent conclusion;
  std::vector<ProofTree> premises;

  auto nodeCount() const noexcept -> std::size_t;
  auto height() const noexcept -> std::size_t;
  auto countRule(std::string_view name) const noexcept -> std::size_t;

  friend auto operator==(const ProofTree&, const ProofTree&) -> bool = default;
};

enum class Verdict { Accepted, Rejected };

enum class RejectReason { None, UnknownRule, WrongArity, NoMatchingInstance };

auto rejectReasonText(RejectReason r) -> std::string_view;

struct CheckReport {
  Verdict verdict = Verdict::Accepted;
  // Child indices from the root down to the offending node.
  std::vector<std::size_t> path;
  RejectReason reason = RejectReason::None;
  std::string message;
  std::optional<Sequent> offending;

  auto accepted() const noexcept -> bool { return verdict == Verdict::Accepted; }
};

// Accepted iff every node instantiates its named schema. Nodes are visited in
// pre-order and the first failure is reported.
auto checkProof(System sys, const ProofTree& p) -> CheckReport;

// Whether the single inference (premise conclusions / conclusion) instantiates
// the named rule; cut is checked by enumerating positions of the cut formula.
auto checkInference(System sys, Rule rule, const Sequent& conclusion,
                    std::span<const Sequent> premises) -> bool;

// Matches for an inference whose premise conclusions are known, in
// enumeration order. For cut a single synthetic match is produced with
// contexts {Gamma1, Gamma2, Gamma3}.
auto matchInference(System sys, Rule rule, const Sequent& conclusion,
                    std::span<const Sequent> premises) -> std::vector<RuleMatch>;

auto applySymbolMap(const SymbolMap& m, const ProofTree& p) -> ProofTree;

} // namespace flcalc
