#include <doctest.h>

#include <random>

#include "blw/denote.hpp"
#include "blw/lbm.hpp"
#include "blw/parse.hpp"
#include "blw/search.hpp"

#include "../support/gen.hpp"

using namespace blw;

namespace {

MVValue v(std::int64_t n, std::int64_t d) { return MVValue(n, d); }

LBMStructure two_world() {
  return LBMStructure(2, {{"p", SlopingFunction({MVValue::zero(), MVValue::one()})},
                          {"q", SlopingFunction({v(1, 2), MVValue::one()})}});
}

}  // namespace

TEST_CASE("evaluation on a two-world structure") {
  const LBMStructure m = two_world();
  CHECK(eval(m, 0, parse_formula("q -> p")) == v(1, 2));
  CHECK(eval(m, 0, parse_formula("(p->q)|(q->p)")) == MVValue::one());
  CHECK(eval(m, 0, parse_formula("top")) == MVValue::one());
  CHECK(eval(m, 1, parse_formula("top")) == MVValue::one());
  CHECK_THROWS_AS(eval(m, 2, parse_formula("p")), std::out_of_range);
  CHECK_THROWS_AS(eval(m, 0, parse_formula("zz")), std::invalid_argument);
}

TEST_CASE("formula profiles") {
  const LBMStructure m(2, {{"p", SlopingFunction({v(1, 2), MVValue::one()})}});
  CHECK(formula_profile(m, parse_formula("p*p")) ==
        SlopingFunction({MVValue::zero(), MVValue::one()}));
  CHECK(formula_profile(m, parse_formula("top")) == SlopingFunction::constant_one(2));

  const LBMStructure m2(2, {{"p", SlopingFunction({MVValue::zero(), v(2, 3)})}});
  CHECK(formula_profile(m2, parse_formula("p -> bot")) ==
        SlopingFunction({MVValue::zero(), v(1, 3)}));
}

TEST_CASE("sequent satisfaction") {
  const LBMStructure m(1, {{"p", SlopingFunction({v(1, 2)})}});
  const auto failure = holds(m, parse_sequent("p |- p*p"));
  REQUIRE(failure.has_value());
  CHECK(failure->world == 0);
  CHECK(failure->premise_value == v(1, 2));
  CHECK(failure->conclusion_value == MVValue::zero());

  std::mt19937_64 gen(17);
  for (int round = 0; round < 100; ++round) {
    const std::size_t k = 1 + gen() % 4;
    const LBMStructure r = random_lbm({"p", "q"}, k, 1 + gen() % 4, gen());
    CHECK_FALSE(holds(r, parse_sequent("p, q |- p*q")).has_value());
    CHECK_FALSE(holds(r, parse_sequent("|- (p->q)|(q->p)")).has_value());
  }
}

TEST_CASE("least failing world is reported") {
  // p = [0, 1/2]: the only failure of p |- p*p is at world 1.
  const LBMStructure m(2, {{"p", SlopingFunction({MVValue::zero(), v(1, 2)})}});
  const auto failure = holds(m, parse_sequent("p |- p*p"));
  REQUIRE(failure.has_value());
  CHECK(failure->world == 1);
}

TEST_CASE("classical structures embed") {
  const ClassicalLinearKripke c(2, {{"p", {false, true}}});
  const LBMStructure m = embed_classical(c);
  CHECK(m.atom_valuation("p") == SlopingFunction({MVValue::zero(), MVValue::one()}));
  CHECK(embed_classical(ClassicalLinearKripke(2, {{"p", {true, true}}}))
            .atom_valuation("p") == SlopingFunction::constant_one(2));
  CHECK(embed_classical(ClassicalLinearKripke(2, {{"p", {false, false}}}))
            .atom_valuation("p") == SlopingFunction::constant_zero(2));
  CHECK_THROWS_AS(ClassicalLinearKripke(2, {{"p", {true, false}}}), std::invalid_argument);
}

TEST_CASE("classical evaluation") {
  const ClassicalLinearKripke c(2, {{"p", {false, true}}, {"q", {false, false}}});
  CHECK_FALSE(classical_eval(c, 0, parse_formula("p -> bot")));
  CHECK(classical_eval(c, 0, parse_formula("top")));
  const ClassicalLinearKripke single(1, {{"p", {false}}, {"q", {false}}});
  CHECK(classical_eval(single, 0, parse_formula("p -> q")));
  CHECK_THROWS_AS(classical_eval(c, 0, parse_formula("p * q")), std::invalid_argument);
}

TEST_CASE("profiles are sloping and monotone") {
  std::mt19937_64 gen(29);
  const std::vector<std::string> atoms{"p", "q", "r"};
  for (int round = 0; round < 300; ++round) {
    const LBMStructure m = random_lbm(atoms, 1 + gen() % 4, 1 + gen() % 4, gen());
    const Formula f = testgen::random_formula(gen, atoms, 3);
    const SlopingFunction profile = formula_profile(m, f);  // ctor checks sloping
    for (std::size_t w = 0; w + 1 < profile.size(); ++w)
      CHECK(profile.at(w) <= profile.at(w + 1));
  }
}

TEST_CASE("one-world evaluation is the algebraic denotation") {
  std::mt19937_64 gen(31);
  const std::vector<std::string> atoms{"p", "q"};
  for (int round = 0; round < 300; ++round) {
    const Formula f = testgen::random_formula(gen, atoms, 4);
    const std::int64_t n = 1 + static_cast<std::int64_t>(gen() % 6);
    Assignment assignment;
    LBMStructure::Valuation valuation;
    for (const auto& atom : atoms) {
      const MVValue x(static_cast<std::int64_t>(gen() % (n + 1)), n);
      assignment.emplace(atom, x);
      valuation.emplace(atom, SlopingFunction({x}));
    }
    const LBMStructure m(1, valuation);
    CHECK(eval(m, 0, f) == mv_denote(assignment, f));
    const Sequent closed({}, f);
    CHECK(!holds(m, closed).has_value() == (mv_denote(assignment, f) == MVValue::one()));

    // With hypotheses: satisfaction matches the denotation of the folded
    // implication.
    const Formula g = testgen::random_formula(gen, atoms, 2);
    const Formula h = testgen::random_formula(gen, atoms, 2);
    const Sequent open({g, h}, f);
    const Formula folded = Formula::implies(Formula::tensor(g, h), f);
    CHECK(!holds(m, open).has_value() == (mv_denote(assignment, folded) == MVValue::one()));
  }
}

TEST_CASE("structure construction validates sizes") {
  CHECK_THROWS_AS(LBMStructure(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(LBMStructure(2, {{"p", SlopingFunction({MVValue::one()})}}),
                  std::invalid_argument);
}
