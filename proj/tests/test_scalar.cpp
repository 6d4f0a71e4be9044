#include "support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace qdga;
using namespace qdga::testing;

TEST_CASE("q is a primitive cube root of unity") {
  const Cyc q = Cyc::q();
  CHECK(q * q * q == Cyc(1));
  CHECK(q * q == Cyc(-1) - q);
  CHECK(q_integer(3).is_zero());
  CHECK(q * q != Cyc(1));
  CHECK(q_power(-1) == q * q);
  CHECK(q_power(7) == q);
}

TEST_CASE("q-integers match the explicit sum") {
  for (unsigned long n = 0; n < 20; ++n) {
    Cyc sum;
    for (unsigned long k = 0; k < n; ++k) sum += q_power(static_cast<long>(k));
    CHECK(q_integer(n) == sum);
  }
  CHECK(q_integer(2) == Cyc(1) + Cyc::q());
  CHECK(q_integer(2) == -(Cyc::q() * Cyc::q()));
}

TEST_CASE("field axioms on seeded samples") {
  Sampler s(11);
  for (int t = 0; t < 300; ++t) {
    const Cyc a = s.scalar(), b = s.scalar(), c = s.scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Cyc());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyc(1));
      CHECK(a.norm() > 0);
    }
    CHECK(Cyc(a.norm()) == a * a.conjugate());
  }
}

TEST_CASE("multiplication agrees with complex evaluation") {
  Sampler s(12);
  for (int t = 0; t < 200; ++t) {
    const Cyc a = s.scalar(), b = s.scalar();
    CHECK(std::abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-9);
    if (!b.is_zero()) CHECK(std::abs(numeric(a / b) - numeric(a) / numeric(b)) < 1e-9);
  }
}

TEST_CASE("inverse of zero is rejected") { CHECK_THROWS_AS(Cyc().inverse(), std::domain_error); }

TEST_CASE("scalar text round trip") {
  CHECK(Cyc().to_string() == "0");
  CHECK(Cyc::q().to_string() == "q");
  CHECK((-Cyc::q()).to_string() == "-q");
  Sampler s(13);
  for (int t = 0; t < 200; ++t) {
    const Cyc a = s.scalar();
    CHECK(Cyc::parse(a.to_string()) == a);
  }
  CHECK(Cyc::parse("[2]_q") == Cyc(1) + Cyc::q());
  CHECK(Cyc::parse("1/2 - 3/4*q") == Cyc(mpq_class(1, 2), mpq_class(-3, 4)));
  CHECK_THROWS_AS(Cyc::parse("1 +"), std::invalid_argument);
  CHECK_THROWS_AS(Cyc::parse("x1"), std::invalid_argument);
}
