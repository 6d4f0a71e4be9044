#include "support.hpp"

#include "qdga/reduce.hpp"

#include <doctest.h>

using namespace qdga;
using namespace qdga::testing;

TEST_CASE("reducer refuses non-affine xi") {
  Session s = make_session(quadratic_config());
  CHECK_THROWS_AS(Reducer(*s.ideal), RewriteNotApplicable);
}

TEST_CASE("zero and letters are normal") {
  Session s = preset("scalar-twist");
  Reducer r(*s.ideal);
  CHECK(r.reduce(Tensor()).normal_form.is_zero());
  CHECK(r.reduce(dx(0, x(1))).normal_form == dx(0, x(1)));
  CHECK(r.reduce(Tensor(word({1, 0}))).normal_form == Tensor(word({1, 0})));
}

TEST_CASE("letter orders") {
  Session s = preset("constant");
  Reducer asc(*s.ideal, LetterOrder::Ascending);
  Reducer desc(*s.ideal, LetterOrder::Descending);
  const DLetter a{1, 0}, b{1, 1}, c{2, 0};
  CHECK(asc.letter_less(a, b));
  CHECK(desc.letter_less(b, a));
  CHECK(asc.letter_less(b, c));
  CHECK(desc.letter_less(b, c));
  CHECK(asc.word_less({a}, {a, a}));
}

TEST_CASE("commutative first-order words vanish in the quotient") {
  // rel1(1,2) and rel1(2,1) together force dx1 dx2 and dx2 dx1 into I.
  Session s = preset("commutative");
  Reducer r(*s.ideal);
  const Tensor e = multiply(*s.xi, dx(0), dx(1));
  CHECK(r.reduce(e).normal_form.is_zero());
  CHECK(membership(*s.ideal, e).status == MembershipStatus::Member);
}

TEST_CASE("constant preset rewrites one word into another") {
  Session s = preset("constant");
  const XiHomomorphism& xi = *s.xi;
  for (auto order : {LetterOrder::Ascending, LetterOrder::Descending}) {
    Reducer r(*s.ideal, order);
    const Tensor e = multiply(xi, dx(0), dx(1));
    const Tensor nf = r.reduce(e).normal_form;
    CHECK(r.is_normal(nf));
    CHECK(membership(*s.ideal, nf - e).status == MembershipStatus::Member);
  }
}

TEST_CASE("reduction is idempotent and stays in the same class") {
  Sampler smp(81);
  for (const auto& cfg : {preset_config("commutative"), preset_config("scalar-twist"),
                          preset_config("constant"), mixed_config()}) {
    Session s = make_session(cfg);
    for (auto order : {LetterOrder::Ascending, LetterOrder::Descending}) {
      Reducer r(*s.ideal, order);
      for (int t = 0; t < 8; ++t) {
        const Tensor e = smp.form(2, static_cast<int>(smp.integer(2, 3)), 1, 3);
        const Tensor nf = r.reduce(e).normal_form;
        CHECK(r.is_normal(nf));
        CHECK(r.reduce(nf).normal_form == nf);
        const auto v = membership(*s.ideal, nf - e);
        CHECK(v.status == MembershipStatus::Member);
      }
    }
  }
}

TEST_CASE("step budget") {
  Session s = preset("constant");
  Reducer r(*s.ideal);
  const Tensor e = multiply(*s.xi, dx(1), dx(0), dx(1), dx(0));
  if (!r.is_normal(e)) CHECK_THROWS_AS(r.reduce(e, 0), StepBudgetExhausted);
}

TEST_CASE("rules rewrite to smaller words") {
  Session s = make_session(mixed_config());
  Reducer r(*s.ideal);
  CHECK_FALSE(r.rules().empty());
  for (const auto& rule : r.rules())
    for (const auto& [w, c] : rule.rhs) {
      CHECK(r.word_less(w, rule.lhs));
      CHECK_FALSE(c.is_zero());
    }
}
