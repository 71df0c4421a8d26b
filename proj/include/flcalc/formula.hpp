#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace flcalc {

// Constructor tags. Leaves first, then unary, then binary; the order is part of
// the total order on formulas and therefore of every deterministic enumeration.
enum class Kind : std::uint8_t {
  Atom,
  One,   // 1, unit of tensor
  Zero,  // 0, unit of the (absent) multiplicative disjunction
  Top,   // unit of additive conjunction
  Bot,   // unit of additive disjunction
  Neg,   // left negation
  CoNeg, // right negation
  Imp,   // A -> B
  CoImp, // A <- B
  Tensor,
  With,
  Plus,
};

auto isUnary(Kind k) noexcept -> bool;
auto isBinary(Kind k) noexcept -> bool;
auto isConstant(Kind k) noexcept -> bool;

class Formula;

namespace detail {
struct FormulaNode;
}

// Immutable, structurally shared formula tree. Equality is syntactic identity.
class Formula {
public:
  static auto atom(std::string name) -> Formula;
  static auto one() -> Formula;
  static auto zero() -> Formula;
  static auto top() -> Formula;
  static auto bot() -> Formula;
  static auto constant(Kind k) -> Formula;
  static auto neg(Formula body) -> Formula;
  static auto coneg(Formula body) -> Formula;
  static auto imp(Formula left, Formula right) -> Formula;
  static auto coimp(Formula left, Formula right) -> Formula;
  static auto tensor(Formula left, Formula right) -> Formula;
  static auto with(Formula left, Formula right) -> Formula;
  static auto plus(Formula left, Formula right) -> Formula;
  static auto unary(Kind k, Formula body) -> Formula;
  static auto binary(Kind k, Formula left, Formula right) -> Formula;

  auto kind() const noexcept -> Kind;
  // Only meaningful for atoms.
  auto name() const noexcept -> const std::string&;
  // Operand of a unary node, or left operand of a binary node.
  auto left() const -> const Formula&;
  auto right() const -> const Formula&;
  auto body() const -> const Formula& { return left(); }

  // Number of constructor nodes.
  auto size() const noexcept -> std::size_t;
  auto hash() const noexcept -> std::size_t;

  auto is(Kind k) const noexcept -> bool { return kind() == k; }

  friend auto operator==(const Formula& a, const Formula& b) noexcept -> bool;
  // Total order: by size, then kind, then atom name, then operands.
  friend auto operator<=>(const Formula& a, const Formula& b) noexcept -> std::strong_ordering;

private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::FormulaNode> node_;
};

namespace detail {
struct FormulaNode {
  Kind kind;
  std::string name;
  std::optional<Formula> left;
  std::optional<Formula> right;
  std::size_t size;
  std::size_t hash;
};
} // namespace detail

using FormulaList = std::vector<Formula>;

struct Sequent {
  FormulaList antecedent;
  std::optional<Formula> succedent;

  auto size() const noexcept -> std::size_t;
  auto hash() const noexcept -> std::size_t;

  friend auto operator==(const Sequent&, const Sequent&) -> bool = default;
  friend auto operator<=>(const Sequent& a, const Sequent& b) -> std::strong_ordering;
};

struct FormulaHash {
  auto operator()(const Formula& f) const noexcept -> std::size_t { return f.hash(); }
};
struct SequentHash {
  auto operator()(const Sequent& s) const noexcept -> std::size_t { return s.hash(); }
};

auto size(const Formula& f) noexcept -> std::size_t;
// Sum of formula sizes plus one.
auto size(const Sequent& s) noexcept -> std::size_t;

// All subformulas of every formula in s, the formulas themselves included.
auto subformulaClosure(const Sequent& s) -> std::set<Formula>;
auto subformulas(const Formula& f) -> std::set<Formula>;

// A self-inverse relabelling of connective constructors.
class SymbolMap {
public:
  // The map fixing every constructor.
  static auto identity() -> SymbolMap;
  // Swaps Imp<->CoImp and Neg<->CoNeg: the correspondence between the
  // restricted calculus and the context-parametrised one.
  static auto sigma() -> SymbolMap;

  auto operator()(Kind k) const noexcept -> Kind;
  auto isIdentity() const noexcept -> bool { return !swapImplications_ && !swapNegations_; }

private:
  SymbolMap(bool imps, bool negs) : swapImplications_(imps), swapNegations_(negs) {}
  bool swapImplications_;
  bool swapNegations_;
};

auto applySymbolMap(const SymbolMap& m, const Formula& f) -> Formula;
auto applySymbolMap(const SymbolMap& m, const Sequent& s) -> Sequent;

} // namespace flcalc
