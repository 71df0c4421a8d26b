#include "flcalc/calculus.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace flcalc {

namespace {

constexpr std::array<std::string_view, kRuleCount> kRuleNames = {
    "id",    "oneR",   "zeroL", "topR",   "botL",  "oneW",  "zeroW", "cut",
    "impL",  "impR",   "coimpL", "coimpR", "negL", "negR",  "conegL", "conegR",
    "tensL", "tensR",  "andL1", "andL2",  "andR",  "orL",   "orR1",  "orR2",
};

using Slice = std::span<const Formula>;

auto list(Slice s) -> FormulaList { return FormulaList(s.begin(), s.end()); }

template <class... Parts>
auto join(const Parts&... parts) -> FormulaList {
  FormulaList out;
  (out.insert(out.end(), std::begin(parts), std::end(parts)), ...);
  return out;
}

auto one(const Formula& f) -> std::array<Formula, 1> { return {f}; }

auto seq(FormulaList ant, std::optional<Formula> succ) -> Sequent {
  return Sequent{std::move(ant), std::move(succ)};
}

auto succIs(const Sequent& s, Kind k) -> bool { return s.succedent && s.succedent->is(k); }

// Positions at which the principal formula of a left rule may sit.
auto leftPositions(System sys, const FormulaList& ant, Kind k) -> std::vector<std::size_t> {
  std::vector<std::size_t> out;
  const std::size_t limit = sys == System::FLPrime ? std::min<std::size_t>(ant.size(), 1) : ant.size();
  for (std::size_t i = 0; i < limit; ++i)
    if (ant[i].is(k))
      out.push_back(i);
  return out;
}

// Left rules whose only parameters are the formulas around the principal one:
// FL admits Gamma1, X, Gamma2; FLPrime only X, Gamma.
void matchContextLeft(System sys, Rule rule, const Sequent& c, std::vector<RuleMatch>& out) {
  const auto& ant = c.antecedent;
  const Slice all(ant);
  Kind k{};
  switch (rule) {
    case Rule::BotL: k = Kind::Bot; break;
    case Rule::OneW: k = Kind::One; break;
    case Rule::TensL: k = Kind::Tensor; break;
    case Rule::AndL1:
    case Rule::AndL2: k = Kind::With; break;
    case Rule::OrL: k = Kind::Plus; break;
    default: return;
  }
  for (std::size_t i : leftPositions(sys, ant, k)) {
    const auto pre = all.first(i);
    const auto post = all.subspan(i + 1);
    const Formula& p = ant[i];
    RuleMatch m{rule, {}, i, {}};
    if (sys == System::FL)
      m.contexts = {list(pre), list(post)};
    else
      m.contexts = {list(post)};
    switch (rule) {
      case Rule::BotL:
        break;
      case Rule::OneW:
        m.premises.push_back(seq(join(pre, post), c.succedent));
        break;
      case Rule::TensL:
        m.premises.push_back(seq(join(pre, one(p.left()), one(p.right()), post), c.succedent));
        break;
      case Rule::AndL1:
        m.premises.push_back(seq(join(pre, one(p.left()), post), c.succedent));
        break;
      case Rule::AndL2:
        m.premises.push_back(seq(join(pre, one(p.right()), post), c.succedent));
        break;
      case Rule::OrL:
        m.premises.push_back(seq(join(pre, one(p.left()), post), c.succedent));
        m.premises.push_back(seq(join(pre, one(p.right()), post), c.succedent));
        break;
      default:
        break;
    }
    out.push_back(std::move(m));
  }
}

// Restricted impL:  G1, A->B, G2 |- C  from  G1 |- A  and  B, G2 |- C.
// Restricted coimpL: A<-B, G1, G2 |- C from  G1 |- A  and  B, G2 |- C.
// FL impL:   G2, A->B, G1, G3 |- C  from  G1 |- A  and  G2, B, G3 |- C.
// FL coimpL: G2, G1, A<-B, G3 |- C  from  G1 |- A  and  G2, B, G3 |- C.
void matchImplicationLeft(System sys, Rule rule, const Sequent& c, std::vector<RuleMatch>& out) {
  const auto& ant = c.antecedent;
  const Slice all(ant);
  const std::size_t n = ant.size();
  const Kind k = rule == Rule::ImpL ? Kind::Imp : Kind::CoImp;

  if (sys == System::FLPrime && rule == Rule::ImpL) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!ant[i].is(k))
        continue;
      const auto g1 = all.first(i);
      const auto g2 = all.subspan(i + 1);
      out.push_back(RuleMatch{rule,
                              {seq(list(g1), ant[i].left()), seq(join(one(ant[i].right()), g2), c.succedent)},
                              i,
                              {list(g1), list(g2)}});
    }
    return;
  }
  if (sys == System::FLPrime) {
    if (n == 0 || !ant[0].is(k))
      return;
    for (std::size_t j = 1; j <= n; ++j) {
      const auto g1 = all.subspan(1, j - 1);
      const auto g2 = all.subspan(j);
      out.push_back(RuleMatch{rule,
                              {seq(list(g1), ant[0].left()), seq(join(one(ant[0].right()), g2), c.succedent)},
                              0,
                              {list(g1), list(g2)}});
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!ant[i].is(k))
      continue;
    const Formula& a = ant[i].left();
    const Formula& b = ant[i].right();
    if (rule == Rule::ImpL) {
      const auto g2 = all.first(i);
      for (std::size_t j = i + 1; j <= n; ++j) {
        const auto g1 = all.subspan(i + 1, j - i - 1);
        const auto g3 = all.subspan(j);
        out.push_back(RuleMatch{rule,
                                {seq(list(g1), a), seq(join(g2, one(b), g3), c.succedent)},
                                i,
                                {list(g1), list(g2), list(g3)}});
      }
    } else {
      const auto g3 = all.subspan(i + 1);
      for (std::size_t j = 0; j <= i; ++j) {
        const auto g2 = all.first(j);
        const auto g1 = all.subspan(j, i - j);
        out.push_back(RuleMatch{rule,
                                {seq(list(g1), a), seq(join(g2, one(b), g3), c.succedent)},
                                i,
                                {list(g1), list(g2), list(g3)}});
      }
    }
  }
}

// Negation left rules. Restricted: negL is  G, neg A |-  and conegL is
// coneg A, G |- ; FL places them the other way round.
void matchNegationLeft(System sys, Rule rule, const Sequent& c, std::vector<RuleMatch>& out) {
  const auto& ant = c.antecedent;
  if (c.succedent || ant.empty())
    return;
  const bool atEnd = (rule == Rule::NegL) == (sys == System::FLPrime);
  const Kind k = rule == Rule::NegL ? Kind::Neg : Kind::CoNeg;
  const std::size_t i = atEnd ? ant.size() - 1 : 0;
  if (!ant[i].is(k))
    return;
  const Slice all(ant);
  const auto rest = atEnd ? all.first(i) : all.subspan(1);
  out.push_back(RuleMatch{rule, {seq(list(rest), ant[i].body())}, i, {list(rest)}});
}

void matchRight(System sys, Rule rule, const Sequent& c, std::vector<RuleMatch>& out) {
  const auto& ant = c.antecedent;
  const Slice all(ant);
  const bool restricted = sys == System::FLPrime;
  auto add = [&](std::vector<Sequent> premises) {
    out.push_back(RuleMatch{rule, std::move(premises), RuleMatch::npos, {ant}});
  };
  switch (rule) {
    case Rule::ZeroW:
      if (succIs(c, Kind::Zero))
        add({seq(ant, std::nullopt)});
      break;
    case Rule::ImpR:
    case Rule::CoImpR: {
      const Kind k = rule == Rule::ImpR ? Kind::Imp : Kind::CoImp;
      if (!succIs(c, k))
        break;
      const Formula& a = c.succedent->left();
      const Formula& b = c.succedent->right();
      // Restricted impR and FL coimpR put the hypothesis in front.
      const bool front = (rule == Rule::ImpR) == restricted;
      add({seq(front ? join(one(a), ant) : join(ant, one(a)), b)});
      break;
    }
    case Rule::NegR:
    case Rule::CoNegR: {
      const Kind k = rule == Rule::NegR ? Kind::Neg : Kind::CoNeg;
      if (!succIs(c, k))
        break;
      const Formula& a = c.succedent->body();
      const bool front = (rule == Rule::NegR) == restricted;
      add({seq(front ? join(one(a), ant) : join(ant, one(a)), std::nullopt)});
      break;
    }
    case Rule::TensR:
      if (!succIs(c, Kind::Tensor))
        break;
      for (std::size_t j = 0; j <= ant.size(); ++j)
        add({seq(list(all.first(j)), c.succedent->left()), seq(list(all.subspan(j)), c.succedent->right())});
      break;
    case Rule::AndR:
      if (succIs(c, Kind::With))
        add({seq(ant, c.succedent->left()), seq(ant, c.succedent->right())});
      break;
    case Rule::OrR1:
      if (succIs(c, Kind::Plus))
        add({seq(ant, c.succedent->left())});
      break;
    case Rule::OrR2:
      if (succIs(c, Kind::Plus))
        add({seq(ant, c.succedent->right())});
      break;
    default:
      break;
  }
}

void matchAxiom(Rule rule, const Sequent& c, std::vector<RuleMatch>& out) {
  const auto& ant = c.antecedent;
  bool ok = false;
  switch (rule) {
    case Rule::Id: ok = ant.size() == 1 && c.succedent && ant[0] == *c.succedent; break;
    case Rule::OneR: ok = ant.empty() && succIs(c, Kind::One); break;
    case Rule::ZeroL: ok = ant.size() == 1 && ant[0].is(Kind::Zero) && !c.succedent; break;
    case Rule::TopR: ok = succIs(c, Kind::Top); break;
    default: break;
  }
  if (ok)
    out.push_back(RuleMatch{rule, {}, rule == Rule::ZeroL ? 0 : RuleMatch::npos, {}});
}

struct TableRow {
  Rule rule;
  std::string_view restricted;
  std::string_view general;
};

// Shapes as "conclusion / premise ; premise".
constexpr std::array<TableRow, kRuleCount> kShapes = {{
    {Rule::Id, "A |- A", "A |- A"},
    {Rule::OneR, "|- 1", "|- 1"},
    {Rule::ZeroL, "0 |-", "0 |-"},
    {Rule::TopR, "G |- top", "G |- top"},
    {Rule::BotL, "bot, G |- C", "G1, bot, G2 |- C"},
    {Rule::OneW, "1, G |- C / G |- C", "G1, 1, G2 |- C / G1, G2 |- C"},
    {Rule::ZeroW, "G |- 0 / G |-", "G |- 0 / G |-"},
    {Rule::Cut, "G2, G1, G3 |- C / G1 |- A ; G2, A, G3 |- C", "G2, G1, G3 |- C / G1 |- A ; G2, A, G3 |- C"},
    {Rule::ImpL, "G1, A -> B, G2 |- C / G1 |- A ; B, G2 |- C", "G2, A -> B, G1, G3 |- C / G1 |- A ; G2, B, G3 |- C"},
    {Rule::ImpR, "G |- A -> B / A, G |- B", "G |- A -> B / G, A |- B"},
    {Rule::CoImpL, "A <- B, G1, G2 |- C / G1 |- A ; B, G2 |- C", "G2, G1, A <- B, G3 |- C / G1 |- A ; G2, B, G3 |- C"},
    {Rule::CoImpR, "G |- A <- B / G, A |- B", "G |- A <- B / A, G |- B"},
    {Rule::NegL, "G, neg A |- / G |- A", "neg A, G |- / G |- A"},
    {Rule::NegR, "G |- neg A / A, G |-", "G |- neg A / G, A |-"},
    {Rule::CoNegL, "coneg A, G |- / G |- A", "G, coneg A |- / G |- A"},
    {Rule::CoNegR, "G |- coneg A / G, A |-", "G |- coneg A / A, G |-"},
    {Rule::TensL, "A * B, G |- C / A, B, G |- C", "G1, A * B, G2 |- C / G1, A, B, G2 |- C"},
    {Rule::TensR, "G1, G2 |- A * B / G1 |- A ; G2 |- B", "G1, G2 |- A * B / G1 |- A ; G2 |- B"},
    {Rule::AndL1, "A /\\ B, G |- C / A, G |- C", "G1, A /\\ B, G2 |- C / G1, A, G2 |- C"},
    {Rule::AndL2, "A /\\ B, G |- C / B, G |- C", "G1, A /\\ B, G2 |- C / G1, B, G2 |- C"},
    {Rule::AndR, "G |- A /\\ B / G |- A ; G |- B", "G |- A /\\ B / G |- A ; G |- B"},
    {Rule::OrL, "A \\/ B, G |- C / A, G |- C ; B, G |- C", "G1, A \\/ B, G2 |- C / G1, A, G2 |- C ; G1, B, G2 |- C"},
    {Rule::OrR1, "G |- A \\/ B / G |- A", "G |- A \\/ B / G |- A"},
    {Rule::OrR2, "G |- A \\/ B / G |- B", "G |- A \\/ B / G |- B"},
}};

auto buildTable(System sys) -> std::array<RuleSchema, kRuleCount> {
  std::array<RuleSchema, kRuleCount> out{};
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    const auto& row = kShapes[i];
    out[i] = RuleSchema{row.rule, sys, ruleArity(row.rule),
                        sys == System::FLPrime ? row.restricted : row.general};
  }
  return out;
}

} // namespace

auto systemName(System s) -> std::string_view { return s == System::FL ? "FL" : "FLPrime"; }

auto parseSystem(std::string_view text) -> System {
  if (text == "fl" || text == "FL")
    return System::FL;
  if (text == "flp" || text == "FLPrime" || text == "flprime" || text == "FL'")
    return System::FLPrime;
  throw std::invalid_argument("unknown system '" + std::string(text) + "' (expected fl or flp)");
}

auto ruleName(Rule r) -> std::string_view { return kRuleNames[static_cast<std::size_t>(r)]; }

auto ruleFromName(std::string_view name) -> std::optional<Rule> {
  for (std::size_t i = 0; i < kRuleCount; ++i)
    if (kRuleNames[i] == name)
      return static_cast<Rule>(i);
  return std::nullopt;
}

auto ruleArity(Rule r) noexcept -> std::size_t {
  switch (r) {
    case Rule::Id:
    case Rule::OneR:
    case Rule::ZeroL:
    case Rule::TopR:
    case Rule::BotL:
      return 0;
    case Rule::Cut:
    case Rule::ImpL:
    case Rule::CoImpL:
    case Rule::TensR:
    case Rule::AndR:
    case Rule::OrL:
      return 2;
    default:
      return 1;
  }
}

auto isAxiom(Rule r) noexcept -> bool { return ruleArity(r) == 0; }

auto ruleSchemas(System sys) -> std::span<const RuleSchema> {
  static const auto restricted = buildTable(System::FLPrime);
  static const auto general = buildTable(System::FL);
  return sys == System::FLPrime ? std::span<const RuleSchema>(restricted) : std::span<const RuleSchema>(general);
}

auto RuleSchema::match(const Sequent& conclusion) const -> std::vector<RuleMatch> {
  return matchRule(system, rule, conclusion);
}

auto matchRule(System sys, Rule rule, const Sequent& c) -> std::vector<RuleMatch> {
  std::vector<RuleMatch> out;
  switch (rule) {
    case Rule::Id:
    case Rule::OneR:
    case Rule::ZeroL:
    case Rule::TopR:
      matchAxiom(rule, c, out);
      break;
    case Rule::BotL:
    case Rule::OneW:
    case Rule::TensL:
    case Rule::AndL1:
    case Rule::AndL2:
    case Rule::OrL:
      matchContextLeft(sys, rule, c, out);
      break;
    case Rule::ImpL:
    case Rule::CoImpL:
      matchImplicationLeft(sys, rule, c, out);
      break;
    case Rule::NegL:
    case Rule::CoNegL:
      matchNegationLeft(sys, rule, c, out);
      break;
    case Rule::Cut:
      break;
    default:
      matchRight(sys, rule, c, out);
      break;
  }
  return out;
}

auto premiseCandidates(System sys, std::string_view rule, const Sequent& conclusion)
    -> std::vector<std::vector<Sequent>> {
  const auto r = ruleFromName(rule);
  if (!r)
    throw UnknownRule("unknown rule '" + std::string(rule) + "'");
  std::vector<std::vector<Sequent>> out;
  for (auto& m : matchRule(sys, *r, conclusion))
    out.push_back(std::move(m.premises));
  return out;
}

auto matchInference(System sys, Rule rule, const Sequent& conclusion, std::span<const Sequent> premises)
    -> std::vector<RuleMatch> {
  std::vector<RuleMatch> out;
  if (premises.size() != ruleArity(rule))
    return out;
  if (rule != Rule::Cut) {
    for (auto& m : matchRule(sys, rule, conclusion))
      if (std::equal(m.premises.begin(), m.premises.end(), premises.begin(), premises.end()))
        out.push_back(std::move(m));
    return out;
  }
  // Cut: G1 |- A and G2, A, G3 |- C conclude G2, G1, G3 |- C.
  const Sequent& left = premises[0];
  const Sequent& right = premises[1];
  if (!left.succedent || right.succedent != conclusion.succedent)
    return out;
  const Formula& a = *left.succedent;
  const auto& g1 = left.antecedent;
  const Slice rant(right.antecedent);
  if (conclusion.antecedent.size() + 1 != g1.size() + rant.size())
    return out;
  for (std::size_t k = 0; k < rant.size(); ++k) {
    if (!(rant[k] == a))
      continue;
    const auto g2 = rant.first(k);
    const auto g3 = rant.subspan(k + 1);
    if (join(g2, g1, g3) == conclusion.antecedent)
      out.push_back(RuleMatch{rule, {left, right}, k, {g1, list(g2), list(g3)}});
  }
  return out;
}

auto checkInference(System sys, Rule rule, const Sequent& conclusion, std::span<const Sequent> premises) -> bool {
  return !matchInference(sys, rule, conclusion, premises).empty();
}

auto rejectReasonText(RejectReason r) -> std::string_view {
  switch (r) {
    case RejectReason::None: return "none";
    case RejectReason::UnknownRule: return "unknown rule";
    case RejectReason::WrongArity: return "wrong arity";
    case RejectReason::NoMatchingInstance: return "no schema instantiation matches";
  }
  return "?";
}

namespace {
auto checkNode(System sys, const ProofTree& p, std::vector<std::size_t>& path, CheckReport& report) -> bool {
  auto reject = [&](RejectReason why, std::string msg) {
    report.verdict = Verdict::Rejected;
    report.path = path;
    report.reason = why;
    report.message = std::move(msg);
    report.offending = p.conclusion;
    return false;
  };
  const auto rule = ruleFromName(p.rule);
  if (!rule)
    return reject(RejectReason::UnknownRule, "unknown rule '" + p.rule + "'");
  if (ruleArity(*rule) != p.premises.size())
    return reject(RejectReason::WrongArity, "rule '" + p.rule + "' takes " + std::to_string(ruleArity(*rule)) +
                                                " premises, node has " + std::to_string(p.premises.size()));
  std::vector<Sequent> concl;
  concl.reserve(p.premises.size());
  for (const auto& q : p.premises)
    concl.push_back(q.conclusion);
  if (!checkInference(sys, *rule, p.conclusion, concl))
    return reject(RejectReason::NoMatchingInstance,
                  "no " + std::string(systemName(sys)) + " instance of '" + p.rule + "' matches this node");
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    path.push_back(i);
    if (!checkNode(sys, p.premises[i], path, report))
      return false;
    path.pop_back();
  }
  return true;
}
} // namespace

auto checkProof(System sys, const ProofTree& p) -> CheckReport {
  CheckReport report;
  std::vector<std::size_t> path;
  checkNode(sys, p, path, report);
  return report;
}

auto ProofTree::nodeCount() const noexcept -> std::size_t {
  std::size_t n = 1;
  for (const auto& q : premises)
    n += q.nodeCount();
  return n;
}

auto ProofTree::height() const noexcept -> std::size_t {
  std::size_t h = 0;
  for (const auto& q : premises)
    h = std::max(h, q.height());
  return h + 1;
}

auto ProofTree::countRule(std::string_view name) const noexcept -> std::size_t {
  std::size_t n = rule == name ? 1 : 0;
  for (const auto& q : premises)
    n += q.countRule(name);
  return n;
}

auto applySymbolMap(const SymbolMap& m, const ProofTree& p) -> ProofTree {
  ProofTree out{p.rule, applySymbolMap(m, p.conclusion), {}};
  out.premises.reserve(p.premises.size());
  for (const auto& q : p.premises)
    out.premises.push_back(applySymbolMap(m, q));
  return out;
}

} // namespace flcalc
