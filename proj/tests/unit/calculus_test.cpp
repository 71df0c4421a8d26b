#include <doctest.h>

#include <algorithm>
#include <set>

#include "flcalc/calculus.hpp"
#include "helpers.hpp"
#include "properties.hpp"

using namespace flcalc;
using unit::F;
using unit::S;

namespace {

auto names(System sys) -> std::set<std::string_view> {
  std::set<std::string_view> out;
  for (const auto& r : ruleSchemas(sys))
    out.insert(r.name());
  return out;
}

auto leaf(std::string rule, std::string_view seq) -> ProofTree { return ProofTree{std::move(rule), S(seq), {}}; }

} // namespace

TEST_SUITE("calculus") {
  TEST_CASE("rule tables") {
    CHECK(ruleSchemas(System::FL).size() == 24);
    CHECK(ruleSchemas(System::FLPrime).size() == 24);
    CHECK(names(System::FL) == names(System::FLPrime));
    const auto t = ruleSchemas(System::FLPrime);
    CHECK(std::count_if(t.begin(), t.end(), [](const auto& r) { return isAxiom(r.rule); }) == 5);
    CHECK(ruleArity(Rule::Cut) == 2);
    CHECK(ruleArity(Rule::TensL) == 1);
    CHECK(ruleArity(Rule::TopR) == 0);
    CHECK(ruleFromName("orR2") == Rule::OrR2);
    CHECK_FALSE(ruleFromName("exchange").has_value());
    CHECK(parseSystem("flp") == System::FLPrime);
    CHECK(parseSystem("FL") == System::FL);
    CHECK_THROWS_AS(parseSystem("LK"), std::invalid_argument);
  }

  TEST_CASE("premise candidates") {
    using V = std::vector<std::vector<Sequent>>;
    CHECK(premiseCandidates(System::FLPrime, "tensL", S("A*B, D |- C")) == V{{S("A, B, D |- C")}});
    CHECK(premiseCandidates(System::FLPrime, "tensL", S("D, A*B |- C")).empty());
    CHECK(premiseCandidates(System::FL, "tensL", S("D, A*B |- C")) == V{{S("D, A, B |- C")}});
    CHECK(premiseCandidates(System::FLPrime, "tensR", S("A, B |- A*B")) ==
          V{{S("|- A"), S("A, B |- B")}, {S("A |- A"), S("B |- B")}, {S("A, B |- A"), S("|- B")}});
    CHECK(premiseCandidates(System::FL, "cut", S("A |- A")).empty());
    CHECK_THROWS_AS(premiseCandidates(System::FL, "exchange", S("A |- A")), UnknownRule);
  }

  TEST_CASE("restricted left rules keep the principal formula at the edge") {
    CHECK(matchRule(System::FLPrime, Rule::BotL, S("D, bot |- C")).empty());
    CHECK(matchRule(System::FLPrime, Rule::BotL, S("bot, D |- C")).size() == 1);
    CHECK(matchRule(System::FL, Rule::BotL, S("D, bot, E |- C")).size() == 1);
    CHECK(matchRule(System::FLPrime, Rule::OneW, S("D, 1 |- C")).empty());
    CHECK(matchRule(System::FL, Rule::OneW, S("D, 1 |- C")).size() == 1);
    CHECK(matchRule(System::FLPrime, Rule::OrL, S("D, A \\/ B |- C")).empty());
    CHECK(matchRule(System::FLPrime, Rule::AndL2, S("A /\\ B, D |- C")).front().premises == std::vector{S("B, D |- C")});
    // negL puts the negation last, conegL first.
    CHECK(matchRule(System::FLPrime, Rule::NegL, S("D, neg A |-")).front().premises == std::vector{S("D |- A")});
    CHECK(matchRule(System::FLPrime, Rule::NegL, S("neg A, D |-")).empty());
    CHECK(matchRule(System::FLPrime, Rule::CoNegL, S("coneg A, D |-")).size() == 1);
    CHECK(matchRule(System::FL, Rule::NegL, S("neg A, D |-")).size() == 1);
    CHECK(matchRule(System::FL, Rule::CoNegL, S("D, coneg A |-")).size() == 1);
  }

  TEST_CASE("implication rule shapes") {
    // Restricted: G1, A->B, G2 |- C from G1 |- A and B, G2 |- C.
    auto m = matchRule(System::FLPrime, Rule::ImpL, S("D, A -> B, E |- C"));
    REQUIRE(m.size() == 1);
    CHECK(m[0].premises == std::vector{S("D |- A"), S("B, E |- C")});
    // Restricted: A<-B, G1, G2 |- C.
    m = matchRule(System::FLPrime, Rule::CoImpL, S("A <- B, D, E |- C"));
    CHECK(m.size() == 3);
    CHECK(matchRule(System::FLPrime, Rule::ImpR, S("D |- A -> B")).front().premises == std::vector{S("A, D |- B")});
    CHECK(matchRule(System::FLPrime, Rule::CoImpR, S("D |- A <- B")).front().premises == std::vector{S("D, A |- B")});
    // FL: G2, A->B, G1, G3 |- C from G1 |- A and G2, B, G3 |- C.
    m = matchRule(System::FL, Rule::ImpL, S("A -> B, A |- B"));
    REQUIRE_FALSE(m.empty());
    CHECK(m.front().premises == std::vector{S("|- A"), S("B, A |- B")});
    CHECK(checkInference(System::FL, Rule::ImpL, S("A -> B, A |- B"), std::vector{S("A |- A"), S("B |- B")}));
    CHECK_FALSE(checkInference(System::FLPrime, Rule::ImpL, S("A -> B, A |- B"), std::vector{S("A |- A"), S("B |- B")}));
    CHECK(matchRule(System::FL, Rule::ImpR, S("D |- A -> B")).front().premises == std::vector{S("D, A |- B")});
    CHECK(matchRule(System::FL, Rule::CoImpR, S("D |- A <- B")).front().premises == std::vector{S("A, D |- B")});
  }

  TEST_CASE("cut reorders contexts") {
    // From G1 |- A and G2, A, G3 |- C conclude G2, G1, G3 |- C.
    CHECK(checkInference(System::FLPrime, Rule::Cut, S("D, E, F |- C"), std::vector{S("E |- A"), S("D, A, F |- C")}));
    CHECK_FALSE(checkInference(System::FLPrime, Rule::Cut, S("E, D, F |- C"), std::vector{S("E |- A"), S("D, A, F |- C")}));
    CHECK(checkInference(System::FL, Rule::Cut, S("|-"), std::vector{S("|- A"), S("A |-")}));
  }

  TEST_CASE("checkProof verdicts") {
    CHECK(checkProof(System::FLPrime, unit::corpusProof("assoc-flprime-cut")).accepted());
    CHECK(checkProof(System::FL, unit::corpusProof("assoc-fl-cutfree")).accepted());

    const auto r = checkProof(System::FLPrime, unit::corpusProof("assoc-fl-cutfree"));
    CHECK_FALSE(r.accepted());
    CHECK(r.reason == RejectReason::NoMatchingInstance);
    CHECK(r.path == std::vector<std::size_t>{0});
    REQUIRE(r.offending.has_value());
    CHECK(*r.offending == S("A, B*C |- (A*B)*C"));

    const auto unknown = checkProof(System::FL, leaf("exchange", "A |- A"));
    CHECK(unknown.reason == RejectReason::UnknownRule);

    ProofTree arity{"tensR", S("A, B |- A*B"), {leaf("id", "A |- A")}};
    CHECK(checkProof(System::FL, arity).reason == RejectReason::WrongArity);

    CHECK(checkProof(System::FLPrime, leaf("id", "A*B |- A*B")).accepted());
    CHECK_FALSE(checkProof(System::FLPrime, leaf("id", "A |- B")).accepted());
    CHECK(checkProof(System::FL, leaf("topR", "A, B |- top")).accepted());
    CHECK(checkProof(System::FL, leaf("oneR", "|- 1")).accepted());
    CHECK(checkProof(System::FL, leaf("zeroL", "0 |-")).accepted());
  }

  TEST_CASE("impL example from text") {
    ProofTree p{"impL", S("A, A -> B |- B"), {leaf("id", "A |- A"), leaf("id", "B |- B")}};
    CHECK(checkProof(System::FLPrime, p).accepted());
    CHECK(p.nodeCount() == 3);
    CHECK(p.height() == 2);
  }

  TEST_CASE("strict descent on random instances") {
    const auto r = testsupport::strictDescent(unit::kSeed, unit::kCases);
    INFO(r.firstFailure);
    CHECK(r.ok(unit::kCases));
  }

  TEST_CASE("checker agrees with the enumerator") {
    const auto r = testsupport::checkerEnumeratorAgreement(unit::kSeed, unit::kCases);
    INFO(r.firstFailure);
    CHECK(r.ok(unit::kCases));
  }

  TEST_CASE("FL generalizes the restricted system modulo sigma") {
    const auto r = testsupport::flGeneralizesRestricted(unit::kSeed, unit::kCases);
    INFO(r.firstFailure);
    CHECK(r.ok(unit::kCases));
  }
}
