#include <doctest.h>

#include "flcalc/formula.hpp"
#include "helpers.hpp"
#include "properties.hpp"

using namespace flcalc;
using unit::F;
using unit::S;

TEST_SUITE("formula") {
  TEST_CASE("size counts constructor nodes") {
    CHECK(size(Formula::atom("A")) == 1);
    CHECK(size(Formula::tensor(Formula::atom("A"), Formula::plus(Formula::atom("B"), Formula::atom("C")))) == 5);
    CHECK(size(F("a1 * a2 -> C")) == 5);
    CHECK(size(Formula::top()) == 1);
    CHECK(size(F("neg coneg A")) == 3);
  }

  TEST_CASE("sequent size is formula sizes plus one") {
    CHECK(S("|-").size() == 1);
    CHECK(S("A |- A").size() == 3);
    CHECK(S("A*(B*C) |- (A*B)*C").size() == 11);
    CHECK(S("A, B |-").size() == 3);
  }

  TEST_CASE("subformula closure") {
    CHECK(subformulaClosure(S("A |- A")) == std::set<Formula>{F("A")});
    CHECK(subformulaClosure(S("A*B |-")) == std::set<Formula>{F("A*B"), F("A"), F("B")});
    const auto c = subformulaClosure(S("A*(B*C) |- (A*B)*C"));
    CHECK(c.size() == 7);
    for (auto s : {"A*(B*C)", "B*C", "(A*B)*C", "A*B", "A", "B", "C"})
      CHECK(c.contains(F(s)));
    CHECK(subformulaClosure(S("|-")).empty());
  }

  TEST_CASE("closure is closed under subformulas") {
    const auto c = subformulaClosure(S("neg (A -> B <- C), top /\\ bot |- 1 \\/ 0"));
    for (const auto& f : c)
      for (const auto& g : subformulas(f))
        CHECK(c.contains(g));
  }

  TEST_CASE("proper subformulas are strictly smaller") {
    const Formula f = F("(A -> neg B) * (C \\/ top) <- coneg 0");
    for (const auto& g : subformulas(f))
      if (!(g == f))
        CHECK(g.size() < f.size());
  }

  TEST_CASE("sigma swaps implications and negations only") {
    const auto sigma = SymbolMap::sigma();
    CHECK(applySymbolMap(sigma, F("A -> B")) == Formula::coimp(F("A"), F("B")));
    CHECK(applySymbolMap(sigma, F("A * B")) == F("A * B"));
    CHECK(applySymbolMap(sigma, F("neg A")) == F("coneg A"));
    CHECK(applySymbolMap(sigma, applySymbolMap(sigma, F("neg A -> B"))) == F("neg A -> B"));
    CHECK(applySymbolMap(sigma, S("A -> B, A |- B")) == S("A <- B, A |- B"));
    CHECK(applySymbolMap(SymbolMap::identity(), F("A -> neg B")) == F("A -> neg B"));
    CHECK(SymbolMap::identity().isIdentity());
    CHECK_FALSE(sigma.isIdentity());
  }

  TEST_CASE("equality is syntactic") {
    CHECK_FALSE(F("(A*B)*C") == F("A*(B*C)"));
    CHECK_FALSE(F("A /\\ B") == F("B /\\ A"));
    CHECK(F("A*(B*C)") == Formula::tensor(F("A"), F("B*C")));
    CHECK_FALSE(F("A") == F("B"));
  }

  TEST_CASE("order is total and starts with size") {
    CHECK(F("A") < F("A*B"));
    CHECK(F("B") < F("A*A*A"));
    CHECK((F("A*B") <=> F("A*B")) == std::strong_ordering::equal);
    CHECK(F("A") < F("B"));
  }

  TEST_CASE("sigma is a size-preserving involution on random formulas") {
    const auto r = testsupport::sigmaInvolution(unit::kSeed, unit::kCases);
    INFO(r.firstFailure);
    CHECK(r.ok(unit::kCases));
  }
}
