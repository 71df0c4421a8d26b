#include "flcalc/translate.hpp"

#include <algorithm>

#include "flcalc/syntax.hpp"

namespace flcalc {

namespace {

auto node(Rule r, Sequent conclusion, std::vector<ProofTree> premises = {}) -> ProofTree {
  return ProofTree{std::string(ruleName(r)), std::move(conclusion), std::move(premises)};
}

auto idNode(const Formula& f) -> ProofTree { return node(Rule::Id, Sequent{{f}, f}); }

auto tensorFold(const FormulaList& ctx, std::size_t n) -> Formula {
  Formula acc = ctx[0];
  for (std::size_t i = 1; i < n; ++i)
    acc = Formula::tensor(acc, ctx[i]);
  return acc;
}

// ctx[0..n) |- fold(ctx[0..n))
auto tensorRightTree(const FormulaList& ctx, std::size_t n) -> ProofTree {
  if (n == 1)
    return idNode(ctx[0]);
  Sequent c{FormulaList(ctx.begin(), ctx.begin() + static_cast<std::ptrdiff_t>(n)), tensorFold(ctx, n)};
  return node(Rule::TensR, std::move(c), {tensorRightTree(ctx, n - 1), idNode(ctx[n - 1])});
}

// Curried cut formula over the first k context formulas.
auto curried(const FormulaList& ctx, std::size_t k, const std::optional<Formula>& goal) -> Formula {
  Formula acc = goal ? Formula::imp(ctx[0], *goal) : Formula::neg(ctx[0]);
  for (std::size_t i = 1; i < k; ++i)
    acc = Formula::imp(ctx[i], acc);
  return acc;
}

// From a proof of  ctx, rest |- goal  derive  rest |- curryContext(ctx, goal).
auto uncurry(ProofTree premise, const FormulaList& ctx, const FormulaList& rest,
             const std::optional<Formula>& goal, CurryStrategy strategy) -> ProofTree {
  const std::size_t n = ctx.size();
  ProofTree cur = std::move(premise);
  if (strategy == CurryStrategy::Tensor) {
    for (std::size_t k = 2; k <= n; ++k) {
      FormulaList ant{tensorFold(ctx, k)};
      ant.insert(ant.end(), ctx.begin() + static_cast<std::ptrdiff_t>(k), ctx.end());
      ant.insert(ant.end(), rest.begin(), rest.end());
      cur = node(Rule::TensL, Sequent{std::move(ant), goal}, {std::move(cur)});
    }
    const Formula folded = tensorFold(ctx, n);
    return node(goal ? Rule::ImpR : Rule::NegR,
                Sequent{rest, goal ? Formula::imp(folded, *goal) : Formula::neg(folded)}, {std::move(cur)});
  }
  for (std::size_t k = 0; k < n; ++k) {
    FormulaList ant(ctx.begin() + static_cast<std::ptrdiff_t>(k) + 1, ctx.end());
    ant.insert(ant.end(), rest.begin(), rest.end());
    const Rule r = (k == 0 && !goal) ? Rule::NegR : Rule::ImpR;
    cur = node(r, Sequent{std::move(ant), curried(ctx, k + 1, goal)}, {std::move(cur)});
  }
  return cur;
}

auto forbiddenContext(Rule r, const RuleMatch& m) -> const FormulaList* {
  switch (r) {
    case Rule::BotL:
    case Rule::OneW:
    case Rule::TensL:
    case Rule::AndL1:
    case Rule::AndL2:
    case Rule::OrL:
      return &m.contexts[0];
    case Rule::ImpL:
    case Rule::CoImpL:
      return &m.contexts[1];
    default:
      return nullptr;
  }
}

class Translator {
public:
  Translator(const TranslateOptions& opts)
      : opts_(opts), map_(opts.literal ? SymbolMap::identity() : SymbolMap::sigma()) {}

  auto run(const ProofTree& p, std::vector<std::size_t>& path) -> ProofTree {
    const Rule rule = *ruleFromName(p.rule);
    std::vector<Sequent> concl;
    for (const auto& q : p.premises)
      concl.push_back(q.conclusion);
    auto matches = matchInference(System::FL, rule, p.conclusion, concl);
    if (matches.empty())
      throw TranslationError("node does not instantiate FL rule '" + p.rule + "'");

    std::vector<ProofTree> premises;
    for (std::size_t i = 0; i < p.premises.size(); ++i) {
      path.push_back(i);
      premises.push_back(run(p.premises[i], path));
      path.pop_back();
    }

    // Prefer the instance with the shortest displaced context.
    const RuleMatch* best = &matches.front();
    std::size_t bestLen = static_cast<std::size_t>(-1);
    for (const auto& m : matches) {
      const auto* ctx = forbiddenContext(rule, m);
      const std::size_t len = ctx ? ctx->size() : 0;
      if (len < bestLen) {
        best = &m;
        bestLen = len;
      }
    }

    const Rule target = opts_.literal ? rule : swapRuleLabel(rule);
    Sequent conclusion = applySymbolMap(map_, p.conclusion);
    if (bestLen == 0) {
      trace_.casesApplied.push_back({path, "relabel:" + p.rule});
      return node(target, std::move(conclusion), std::move(premises));
    }

    FormulaList ctx;
    for (const auto& f : *forbiddenContext(rule, *best))
      ctx.push_back(applySymbolMap(map_, f));
    const auto& goal = conclusion.succedent;
    const Formula cutFormula = curryContext(ctx, goal, opts_.strategy);

    FormulaList rest(conclusion.antecedent.begin() + static_cast<std::ptrdiff_t>(ctx.size()),
                     conclusion.antecedent.end());
    // Premises that carry the displaced context as a prefix get it curried
    // into the succedent; for the implication rules that is only the second.
    const std::size_t first = (rule == Rule::ImpL || rule == Rule::CoImpL) ? 1 : 0;
    for (std::size_t i = first; i < premises.size(); ++i) {
      const auto& ant = premises[i].conclusion.antecedent;
      FormulaList tail(ant.begin() + static_cast<std::ptrdiff_t>(ctx.size()), ant.end());
      premises[i] = uncurry(std::move(premises[i]), ctx, tail, goal, opts_.strategy);
    }
    ProofTree reduced = node(target, Sequent{rest, cutFormula}, std::move(premises));
    ProofTree gadget = contextGadget(ctx, goal, opts_.strategy);
    trace_.cutsIntroduced += 1 + gadget.countRule("cut");
    trace_.casesApplied.push_back({path, "curry-cut:" + p.rule});
    return node(Rule::Cut, std::move(conclusion), {std::move(reduced), std::move(gadget)});
  }

  auto trace() -> TranslationTrace& { return trace_; }

private:
  TranslateOptions opts_;
  SymbolMap map_;
  TranslationTrace trace_;
};

} // namespace

auto parseCurryStrategy(std::string_view text) -> CurryStrategy {
  if (text == "tensor")
    return CurryStrategy::Tensor;
  if (text == "curried")
    return CurryStrategy::Curried;
  throw std::invalid_argument("unknown strategy '" + std::string(text) + "' (expected tensor or curried)");
}

auto swapRuleLabel(Rule r) noexcept -> Rule {
  switch (r) {
    case Rule::ImpL: return Rule::CoImpL;
    case Rule::CoImpL: return Rule::ImpL;
    case Rule::ImpR: return Rule::CoImpR;
    case Rule::CoImpR: return Rule::ImpR;
    case Rule::NegL: return Rule::CoNegL;
    case Rule::CoNegL: return Rule::NegL;
    case Rule::NegR: return Rule::CoNegR;
    case Rule::CoNegR: return Rule::NegR;
    default: return r;
  }
}

auto swapRuleLabel(std::string_view rule) -> std::string {
  if (auto r = ruleFromName(rule))
    return std::string(ruleName(swapRuleLabel(*r)));
  return std::string(rule);
}

auto curryContext(const FormulaList& ctx, const std::optional<Formula>& goal, CurryStrategy strategy) -> Formula {
  if (ctx.empty()) {
    if (!goal)
      throw TranslationError("cannot curry an empty context into an empty succedent");
    return *goal;
  }
  if (strategy == CurryStrategy::Curried)
    return curried(ctx, ctx.size(), goal);
  const Formula folded = tensorFold(ctx, ctx.size());
  return goal ? Formula::imp(folded, *goal) : Formula::neg(folded);
}

auto curryContext(const FormulaList& ctx, const Formula& goal, CurryStrategy strategy) -> Formula {
  return curryContext(ctx, std::optional<Formula>(goal), strategy);
}

auto contextGadget(const FormulaList& ctx, const std::optional<Formula>& goal, CurryStrategy strategy)
    -> ProofTree {
  if (ctx.empty())
    throw TranslationError("context gadget needs a nonempty context");
  const std::size_t n = ctx.size();
  auto base = [&](const Formula& a) {
    if (goal)
      return node(Rule::ImpL, Sequent{{a, Formula::imp(a, *goal)}, goal}, {idNode(a), idNode(*goal)});
    return node(Rule::NegL, Sequent{{a, Formula::neg(a)}, std::nullopt}, {idNode(a)});
  };
  if (strategy == CurryStrategy::Tensor) {
    if (n == 1)
      return base(ctx[0]);
    const Formula folded = tensorFold(ctx, n);
    FormulaList ant = ctx;
    if (goal) {
      ant.push_back(Formula::imp(folded, *goal));
      return node(Rule::ImpL, Sequent{std::move(ant), goal}, {tensorRightTree(ctx, n), idNode(*goal)});
    }
    ant.push_back(Formula::neg(folded));
    return node(Rule::NegL, Sequent{std::move(ant), std::nullopt}, {tensorRightTree(ctx, n)});
  }
  // a1, ..., ak, G_k |- goal, built by cutting  ak, ak -> G_{k-1} |- G_{k-1}
  // against the gadget for k - 1.
  ProofTree g = base(ctx[0]);
  for (std::size_t k = 2; k <= n; ++k) {
    const Formula inner = curried(ctx, k - 1, goal);
    const Formula outer = curried(ctx, k, goal);
    ProofTree step = node(Rule::ImpL, Sequent{{ctx[k - 1], outer}, inner}, {idNode(ctx[k - 1]), idNode(inner)});
    FormulaList ant(ctx.begin(), ctx.begin() + static_cast<std::ptrdiff_t>(k));
    ant.push_back(outer);
    g = node(Rule::Cut, Sequent{std::move(ant), goal}, {std::move(step), std::move(g)});
  }
  return g;
}

auto contextGadget(const FormulaList& ctx, const Formula& goal, CurryStrategy strategy) -> ProofTree {
  return contextGadget(ctx, std::optional<Formula>(goal), strategy);
}

namespace {
auto embedNode(const ProofTree& p, const SymbolMap& m) -> ProofTree {
  ProofTree out{swapRuleLabel(p.rule), applySymbolMap(m, p.conclusion), {}};
  for (const auto& q : p.premises)
    out.premises.push_back(embedNode(q, m));
  return out;
}
} // namespace

auto embedToFL(const ProofTree& p) -> ProofTree {
  if (auto r = checkProof(System::FLPrime, p); !r.accepted())
    throw TranslationError("input is not an accepted FLPrime proof: " + r.message);
  ProofTree out = embedNode(p, SymbolMap::sigma());
  if (auto r = checkProof(System::FL, out); !r.accepted())
    throw std::logic_error("embedding produced an invalid FL proof: " + r.message);
  return out;
}

auto translateToFLPrime(const ProofTree& p, const TranslateOptions& options) -> TranslationTrace {
  if (auto r = checkProof(System::FL, p); !r.accepted())
    throw TranslationError("input is not an accepted FL proof: " + r.message);
  Translator t(options);
  std::vector<std::size_t> path;
  ProofTree out = t.run(p, path);
  TranslationTrace trace = std::move(t.trace());
  trace.output = std::move(out);
  if (!options.literal) {
    if (auto r = checkProof(System::FLPrime, trace.output); !r.accepted())
      throw std::logic_error("translation produced an invalid FLPrime proof at " +
                             printSequent(*r.offending) + ": " + r.message);
  }
  return trace;
}

} // namespace flcalc
