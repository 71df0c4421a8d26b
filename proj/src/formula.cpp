#include "flcalc/formula.hpp"

#include <functional>
#include <stdexcept>

namespace flcalc {

namespace {

auto mix(std::size_t seed, std::size_t v) noexcept -> std::size_t {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

auto makeNode(Kind k, std::string name, std::optional<Formula> l, std::optional<Formula> r)
    -> std::shared_ptr<const detail::FormulaNode> {
  std::size_t size = 1;
  std::size_t h = mix(0x51ed2701, static_cast<std::size_t>(k));
  if (k == Kind::Atom)
    h = mix(h, std::hash<std::string>{}(name));
  if (l) {
    size += l->size();
    h = mix(h, l->hash());
  }
  if (r) {
    size += r->size();
    h = mix(h, r->hash());
  }
  return std::make_shared<const detail::FormulaNode>(
      detail::FormulaNode{k, std::move(name), std::move(l), std::move(r), size, h});
}

} // namespace

auto isUnary(Kind k) noexcept -> bool { return k == Kind::Neg || k == Kind::CoNeg; }

auto isBinary(Kind k) noexcept -> bool {
  switch (k) {
    case Kind::Imp:
    case Kind::CoImp:
    case Kind::Tensor:
    case Kind::With:
    case Kind::Plus:
      return true;
    default:
      return false;
  }
}

auto isConstant(Kind k) noexcept -> bool {
  return k == Kind::One || k == Kind::Zero || k == Kind::Top || k == Kind::Bot;
}

auto Formula::atom(std::string name) -> Formula {
  if (name.empty())
    throw std::invalid_argument("atom name must be nonempty");
  return Formula(makeNode(Kind::Atom, std::move(name), std::nullopt, std::nullopt));
}

auto Formula::constant(Kind k) -> Formula {
  static const Formula one(makeNode(Kind::One, {}, std::nullopt, std::nullopt));
  static const Formula zero(makeNode(Kind::Zero, {}, std::nullopt, std::nullopt));
  static const Formula top(makeNode(Kind::Top, {}, std::nullopt, std::nullopt));
  static const Formula bot(makeNode(Kind::Bot, {}, std::nullopt, std::nullopt));
  switch (k) {
    case Kind::One: return one;
    case Kind::Zero: return zero;
    case Kind::Top: return top;
    case Kind::Bot: return bot;
    default: throw std::invalid_argument("not a constant kind");
  }
}

auto Formula::one() -> Formula { return constant(Kind::One); }
auto Formula::zero() -> Formula { return constant(Kind::Zero); }
auto Formula::top() -> Formula { return constant(Kind::Top); }
auto Formula::bot() -> Formula { return constant(Kind::Bot); }

auto Formula::unary(Kind k, Formula body) -> Formula {
  if (!isUnary(k))
    throw std::invalid_argument("not a unary kind");
  return Formula(makeNode(k, {}, std::move(body), std::nullopt));
}

auto Formula::binary(Kind k, Formula left, Formula right) -> Formula {
  if (!isBinary(k))
    throw std::invalid_argument("not a binary kind");
  return Formula(makeNode(k, {}, std::move(left), std::move(right)));
}

auto Formula::neg(Formula body) -> Formula { return unary(Kind::Neg, std::move(body)); }
auto Formula::coneg(Formula body) -> Formula { return unary(Kind::CoNeg, std::move(body)); }
auto Formula::imp(Formula l, Formula r) -> Formula { return binary(Kind::Imp, std::move(l), std::move(r)); }
auto Formula::coimp(Formula l, Formula r) -> Formula { return binary(Kind::CoImp, std::move(l), std::move(r)); }
auto Formula::tensor(Formula l, Formula r) -> Formula { return binary(Kind::Tensor, std::move(l), std::move(r)); }
auto Formula::with(Formula l, Formula r) -> Formula { return binary(Kind::With, std::move(l), std::move(r)); }
auto Formula::plus(Formula l, Formula r) -> Formula { return binary(Kind::Plus, std::move(l), std::move(r)); }

auto Formula::kind() const noexcept -> Kind { return node_->kind; }
auto Formula::name() const noexcept -> const std::string& { return node_->name; }

auto Formula::left() const -> const Formula& {
  if (!node_->left)
    throw std::logic_error("formula has no operand");
  return *node_->left;
}

auto Formula::right() const -> const Formula& {
  if (!node_->right)
    throw std::logic_error("formula has no right operand");
  return *node_->right;
}

auto Formula::size() const noexcept -> std::size_t { return node_->size; }
auto Formula::hash() const noexcept -> std::size_t { return node_->hash; }

auto operator==(const Formula& a, const Formula& b) noexcept -> bool {
  if (a.node_ == b.node_)
    return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size)
    return false;
  if (x.kind == Kind::Atom)
    return x.name == y.name;
  if (x.left && !(*x.left == *y.left))
    return false;
  if (x.right && !(*x.right == *y.right))
    return false;
  return true;
}

auto operator<=>(const Formula& a, const Formula& b) noexcept -> std::strong_ordering {
  if (a.node_ == b.node_)
    return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.size <=> y.size; c != 0)
    return c;
  if (auto c = x.kind <=> y.kind; c != 0)
    return c;
  if (x.kind == Kind::Atom)
    return x.name.compare(y.name) <=> 0;
  if (x.left) {
    if (auto c = *x.left <=> *y.left; c != 0)
      return c;
  }
  if (x.right) {
    if (auto c = *x.right <=> *y.right; c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

auto Sequent::size() const noexcept -> std::size_t {
  std::size_t n = 1;
  for (const auto& f : antecedent)
    n += f.size();
  if (succedent)
    n += succedent->size();
  return n;
}

auto Sequent::hash() const noexcept -> std::size_t {
  std::size_t h = mix(0x5e9, antecedent.size());
  for (const auto& f : antecedent)
    h = mix(h, f.hash());
  return mix(h, succedent ? succedent->hash() : 0x7);
}

auto operator<=>(const Sequent& a, const Sequent& b) -> std::strong_ordering {
  if (auto c = a.antecedent.size() <=> b.antecedent.size(); c != 0)
    return c;
  for (std::size_t i = 0; i < a.antecedent.size(); ++i)
    if (auto c = a.antecedent[i] <=> b.antecedent[i]; c != 0)
      return c;
  if (auto c = a.succedent.has_value() <=> b.succedent.has_value(); c != 0)
    return c;
  if (a.succedent)
    return *a.succedent <=> *b.succedent;
  return std::strong_ordering::equal;
}

auto size(const Formula& f) noexcept -> std::size_t { return f.size(); }
auto size(const Sequent& s) noexcept -> std::size_t { return s.size(); }

namespace {
void collect(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second)
    return;
  if (isUnary(f.kind())) {
    collect(f.body(), out);
  } else if (isBinary(f.kind())) {
    collect(f.left(), out);
    collect(f.right(), out);
  }
}
} // namespace

auto subformulas(const Formula& f) -> std::set<Formula> {
  std::set<Formula> out;
  collect(f, out);
  return out;
}

auto subformulaClosure(const Sequent& s) -> std::set<Formula> {
  std::set<Formula> out;
  for (const auto& f : s.antecedent)
    collect(f, out);
  if (s.succedent)
    collect(*s.succedent, out);
  return out;
}

auto SymbolMap::identity() -> SymbolMap { return SymbolMap(false, false); }
auto SymbolMap::sigma() -> SymbolMap { return SymbolMap(true, true); }

auto SymbolMap::operator()(Kind k) const noexcept -> Kind {
  if (swapImplications_) {
    if (k == Kind::Imp) return Kind::CoImp;
    if (k == Kind::CoImp) return Kind::Imp;
  }
  if (swapNegations_) {
    if (k == Kind::Neg) return Kind::CoNeg;
    if (k == Kind::CoNeg) return Kind::Neg;
  }
  return k;
}

auto applySymbolMap(const SymbolMap& m, const Formula& f) -> Formula {
  if (m.isIdentity())
    return f;
  const Kind k = f.kind();
  if (isUnary(k))
    return Formula::unary(m(k), applySymbolMap(m, f.body()));
  if (isBinary(k))
    return Formula::binary(m(k), applySymbolMap(m, f.left()), applySymbolMap(m, f.right()));
  return f;
}

auto applySymbolMap(const SymbolMap& m, const Sequent& s) -> Sequent {
  Sequent out;
  out.antecedent.reserve(s.antecedent.size());
  for (const auto& f : s.antecedent)
    out.antecedent.push_back(applySymbolMap(m, f));
  if (s.succedent)
    out.succedent = applySymbolMap(m, *s.succedent);
  return out;
}

} // namespace flcalc
