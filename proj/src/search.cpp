#include "flcalc/search.hpp"

#include <array>
#include <stdexcept>

namespace flcalc {

namespace {

constexpr std::array<Rule, kRuleCount - 1> kSearchOrder = {
    Rule::Id,    Rule::OneR,   Rule::ZeroL, Rule::TopR,   Rule::BotL,
    Rule::ImpR,  Rule::CoImpR, Rule::NegR,  Rule::CoNegR, Rule::OrR1, Rule::OrR2, Rule::ZeroW,
    Rule::OneW,  Rule::TensL,  Rule::AndL1, Rule::AndL2,  Rule::NegL, Rule::CoNegL,
    Rule::TensR, Rule::AndR,   Rule::OrL,   Rule::ImpL,   Rule::CoImpL,
};

} // namespace

auto searchStatusName(SearchStatus s) -> std::string_view {
  switch (s) {
    case SearchStatus::Provable: return "Provable";
    case SearchStatus::Unprovable: return "Unprovable";
    case SearchStatus::ResourceExceeded: return "ResourceExceeded";
  }
  return "?";
}

auto searchOrder() -> std::span<const Rule> { return kSearchOrder; }

auto CutFreeProver::provable(const Sequent& goal) -> bool {
  if (auto it = memo_.find(goal); it != memo_.end())
    return it->second.proved;
  Entry entry;
  for (Rule rule : kSearchOrder) {
    for (auto& m : matchRule(sys_, rule, goal)) {
      bool all = true;
      for (const auto& p : m.premises) {
        if (!provable(p)) {
          all = false;
          break;
        }
      }
      if (all) {
        entry = Entry{true, rule, std::move(m.premises)};
        goto done;
      }
    }
  }
done:
  const bool proved = entry.proved;
  memo_.insert_or_assign(goal, std::move(entry));
  return proved;
}

auto CutFreeProver::build(const Sequent& s) const -> ProofTree {
  const auto& e = memo_.at(s);
  ProofTree t{std::string(ruleName(e.rule)), s, {}};
  t.premises.reserve(e.premises.size());
  for (const auto& p : e.premises)
    t.premises.push_back(build(p));
  return t;
}

auto CutFreeProver::prove(const Sequent& goal) -> std::optional<ProofTree> {
  if (!provable(goal))
    return std::nullopt;
  return build(goal);
}

auto decideCutFree(System sys, const Sequent& goal) -> SearchOutcome {
  CutFreeProver prover(sys);
  if (auto p = prover.prove(goal))
    return SearchOutcome{SearchStatus::Provable, std::move(p), {}};
  return SearchOutcome{SearchStatus::Unprovable, std::nullopt, {}};
}

namespace {

class CutSearch {
public:
  CutSearch(System sys, const CutBudget& budget) : sys_(sys), budget_(budget), filter_(System::FL) {}

  struct Result {
    bool proved = false;
    bool pruned = false;
  };

  auto run(const Sequent& s, std::size_t depth) -> Result {
    if (depth == 0)
      return {false, true};
    if (exhausted_.contains(s))
      return {false, false};
    const Key key{s, depth};
    if (auto it = memo_.find(key); it != memo_.end())
      return {it->second.proved, it->second.pruned};

    if (budget_.refuteViaFL) {
      const Sequent image = sys_ == System::FLPrime ? applySymbolMap(SymbolMap::sigma(), s) : s;
      if (!filter_.provable(image)) {
        exhausted_.insert(s);
        return {false, false};
      }
    }

    bool pruned = false;
    auto attempt = [&](Rule rule, std::vector<Sequent> premises,
                       std::optional<Formula> cutFormula) -> bool {
      for (const auto& p : premises) {
        const auto r = run(p, depth - 1);
        if (!r.proved) {
          pruned = pruned || r.pruned;
          return false;
        }
      }
      memo_.insert_or_assign(key, Entry{true, false, rule, std::move(premises), std::move(cutFormula)});
      return true;
    };

    for (Rule rule : kSearchOrder)
      for (auto& m : matchRule(sys_, rule, s))
        if (attempt(rule, std::move(m.premises), std::nullopt))
          return {true, false};

    const auto& ant = s.antecedent;
    const std::size_t n = ant.size();
    for (const auto& f : budget_.pool) {
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
          Sequent left{FormulaList(ant.begin() + i, ant.begin() + j), f};
          Sequent right{FormulaList(ant.begin(), ant.begin() + i), s.succedent};
          right.antecedent.push_back(f);
          right.antecedent.insert(right.antecedent.end(), ant.begin() + j, ant.end());
          if (attempt(Rule::Cut, {std::move(left), std::move(right)}, f))
            return {true, false};
        }
      }
    }

    if (!pruned)
      exhausted_.insert(s);
    else
      memo_.insert_or_assign(key, Entry{false, true, Rule::Cut, {}, std::nullopt});
    return {false, pruned};
  }

  auto build(const Sequent& s, std::size_t depth) const -> ProofTree {
    const auto& e = memo_.at(Key{s, depth});
    ProofTree t{std::string(ruleName(e.rule)), s, {}};
    for (const auto& p : e.premises)
      t.premises.push_back(build(p, depth - 1));
    return t;
  }

private:
  struct Key {
    Sequent sequent;
    std::size_t depth;
    friend auto operator==(const Key&, const Key&) -> bool = default;
  };
  struct KeyHash {
    auto operator()(const Key& k) const noexcept -> std::size_t { return k.sequent.hash() * 31 + k.depth; }
  };
  struct Entry {
    bool proved;
    bool pruned;
    Rule rule;
    std::vector<Sequent> premises;
    std::optional<Formula> cutFormula;
  };

  System sys_;
  const CutBudget& budget_;
  CutFreeProver filter_;
  std::unordered_map<Key, Entry, KeyHash> memo_;
  std::unordered_set<Sequent, SequentHash> exhausted_;
};

} // namespace

auto searchWithCuts(System sys, const Sequent& goal, const CutBudget& budget) -> SearchOutcome {
  if (budget.depth == 0)
    throw std::invalid_argument("cut budget depth must be at least 1");
  CutSearch search(sys, budget);
  // Iterative deepening, so the witness has minimal height.
  CutSearch::Result r;
  for (std::size_t d = 1; d <= budget.depth; ++d) {
    r = search.run(goal, d);
    if (r.proved)
      return SearchOutcome{SearchStatus::Provable, search.build(goal, d), {}};
    if (!r.pruned)
      break;
  }
  if (r.pruned)
    return SearchOutcome{SearchStatus::ResourceExceeded, std::nullopt,
                         "depth bound " + std::to_string(budget.depth) + " reached"};
  return SearchOutcome{SearchStatus::Unprovable, std::nullopt, {}};
}

} // namespace flcalc
