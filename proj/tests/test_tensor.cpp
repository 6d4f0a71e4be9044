#include "support.hpp"

#include <doctest.h>

using namespace qdga;
using namespace qdga::testing;

TEST_CASE("coefficients pass through letters via xi") {
  Sampler smp(51);
  Session s = make_session(mixed_config());
  for (int t = 0; t < 30; ++t) {
    const Poly u = smp.poly(2, 2);
    const XiMatrix m = s.xi->apply(u);
    for (Gen j = 0; j < 2; ++j) {
      Tensor expected1, expected2;
      for (Gen k = 0; k < 2; ++k) {
        expected1 += dx(k, m.at(k, j));
        expected2 += d2x(k, m.at(k, j));
      }
      CHECK(multiply(*s.xi, Tensor(u), dx(j)) == expected1);
      CHECK(multiply(*s.xi, Tensor(u), d2x(j)) == expected2);
    }
  }
}

TEST_CASE("commutative example: x1 dx2 = dx2 x1") {
  Session s = preset("commutative");
  CHECK(multiply(*s.xi, Tensor(x(0)), dx(1)) == dx(1, x(0)));
}

TEST_CASE("tensor product is associative and distributive") {
  Sampler smp(52);
  for (const auto& cfg : {preset_config("constant"), mixed_config(), quadratic_config()}) {
    Session s = make_session(cfg);
    const XiHomomorphism& xi = *s.xi;
    for (int t = 0; t < 25; ++t) {
      const Tensor a = smp.mixed(2, 2, 1), b = smp.mixed(2, 2, 1), c = smp.mixed(2, 2, 1);
      CHECK(multiply(xi, multiply(xi, a, b), c) == multiply(xi, a, multiply(xi, b, c)));
      CHECK(multiply(xi, a, b + c) == multiply(xi, a, b) + multiply(xi, a, c));
      CHECK(multiply(xi, a + b, c) == multiply(xi, a, c) + multiply(xi, b, c));
      const Poly u = smp.poly(2, 2);
      CHECK(left_multiply(xi, u, a) == multiply(xi, Tensor(u), a));
      CHECK(a * u == multiply(xi, a, Tensor(u)));
    }
  }
}

TEST_CASE("grades add under the product") {
  Sampler smp(53);
  Session s = make_session(mixed_config());
  for (int t = 0; t < 40; ++t) {
    const int ga = static_cast<int>(smp.integer(0, 3)), gb = static_cast<int>(smp.integer(0, 3));
    const Tensor a = smp.form(2, ga, 1), b = smp.form(2, gb, 1);
    const Tensor p = multiply(*s.xi, a, b);
    if (!p.is_zero()) CHECK(p.homogeneous_grade() == ga + gb);
  }
}

TEST_CASE("grade components partition an element") {
  Sampler smp(54);
  for (int t = 0; t < 30; ++t) {
    const Tensor a = smp.mixed(2, 4, 2);
    Tensor sum;
    for (const auto& [g, part] : a.grade_components()) {
      CHECK(part.homogeneous_grade() == g);
      sum += part;
    }
    CHECK(sum == a);
  }
}

TEST_CASE("letters exist only in grades 1 and 2") {
  CHECK_THROWS(Tensor::letter(3, 0));
  CHECK_THROWS(Tensor::letter(0, 0));
  CHECK(dx(0).homogeneous_grade() == 1);
  CHECK(d2x(1).homogeneous_grade() == 2);
  CHECK(Tensor().is_zero());
  CHECK(Tensor(Poly()).is_zero());
}
