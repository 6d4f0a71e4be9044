#include "support.hpp"

#include "qdga/verify.hpp"

#include <doctest.h>

using namespace qdga;
using namespace qdga::testing;

TEST_CASE("leibniz examples") {
  Session s = preset("commutative");
  const Ideal& I = *s.ideal;
  auto base = check_q_leibniz(I, Tensor(x(0)), Tensor(x(1)));
  CHECK(base.tier == Tier::Raw);
  CHECK(base.raw_zero());
  CHECK(base.outcome == Outcome::Pass);
  auto mod = check_q_leibniz(I, dx(0), Tensor(x(0)));
  CHECK(mod.outcome == Outcome::Pass);
  auto three = check_q_leibniz(I, multiply(*s.xi, dx(0), d2x(1)), dx(0, x(1)));
  CHECK(three.outcome == Outcome::Pass);
  CHECK_THROWS(check_q_leibniz(I, dx(0) + Tensor(x(0)), Tensor(x(1))));
}

TEST_CASE("leibniz residual against a letter-coefficient form is a generator") {
  Session s = make_session(mixed_config());
  auto inst = check_q_leibniz(*s.ideal, Tensor(x(0)), dx(1, x(0)));
  CHECK(inst.tier == Tier::ModIdeal);
  CHECK(inst.outcome == Outcome::Pass);
  if (inst.verdict && inst.verdict->witness) CHECK(inst.verdict->witness->terms.size() <= 1);
}

TEST_CASE("d3 examples") {
  for (const auto& name : preset_names()) {
    Session s = preset(name);
    auto gen = check_d3(*s.ideal, Tensor(x(0)));
    CHECK(gen.raw_zero());
    CHECK(check_d3(*s.ideal, Tensor(word({0, 1}))).outcome == Outcome::Pass);
    CHECK(check_d3(*s.ideal, dx(0, x(1))).outcome == Outcome::Pass);
  }
}

TEST_CASE("proposition examples") {
  Session s = preset("commutative");
  for (const auto& inst : check_proposition(*s.ideal, Poly::one(), 0)) CHECK(inst.raw_zero());
  for (const auto& inst : check_proposition(*s.ideal, x(0), 1)) {
    CHECK(inst.outcome == Outcome::Pass);
    if (inst.verdict && inst.verdict->witness) CHECK(inst.verdict->witness->terms.size() <= 1);
  }
  for (const auto& inst : check_proposition(*s.ideal, word({0, 1}), 0)) CHECK(inst.outcome == Outcome::Pass);
}

TEST_CASE("binomial examples") {
  Session s = preset("commutative");
  CHECK(check_d2_binomial(*s.ideal, Poly::one(), Poly::one()).raw_zero());
  CHECK(check_d2_binomial(*s.ideal, x(0), x(1)).outcome == Outcome::Pass);
  CHECK(check_d2_binomial(*s.ideal, word({0, 0}), x(1)).outcome == Outcome::Pass);
}

TEST_CASE("generator differentials") {
  for (const auto& name : preset_names()) {
    Session s = preset(name);
    for (Gen i = 0; i < 2; ++i)
      for (Gen j = 0; j < 2; ++j)
        for (const auto& inst : check_generator_diff(*s.ideal, i, j)) CHECK(inst.outcome == Outcome::Pass);
  }
}

TEST_CASE("a failing raw check keeps its residual") {
  Session s = preset("commutative");
  auto inst = judge(*s.ideal, "dx1", dx(0), Tier::Raw, {});
  CHECK(inst.outcome == Outcome::Fail);
  CHECK(inst.residual == dx(0));
  auto mod = judge(*s.ideal, "dx1", dx(0), Tier::ModIdeal, {});
  CHECK(mod.outcome == Outcome::Fail);
  REQUIRE(mod.verdict.has_value());
  CHECK(mod.verdict->status == MembershipStatus::NotMemberAtBound);
  const auto j = to_json(mod);
  CHECK(j["residual"]["text"] == "dx1");
}

TEST_CASE("every suite passes on a generic affine xi") {
  Session s = make_session(mixed_config());
  SuiteOptions o;
  o.random_elements = 5;
  o.random_forms = 2;
  for (const auto& r : run_suites(s, "all", o)) {
    CHECK_MESSAGE(r.all_passed(), to_text(r));
  }
}

TEST_CASE("reports are deterministic and independent of the job count") {
  Session s = preset("scalar-twist");
  SuiteOptions o;
  o.random_elements = 4;
  const auto a = to_json(run_suite(s, "iterates", o)).dump();
  const auto b = to_json(run_suite(s, "iterates", o)).dump();
  o.jobs = 3;
  const auto c = to_json(run_suite(s, "iterates", o)).dump();
  CHECK(a == b);
  CHECK(a == c);
  o.seed = 99;
  CHECK(to_json(run_suite(s, "iterates", o)).dump() != a);
  CHECK_THROWS_AS(run_suite(s, "nope", o), std::invalid_argument);
}
