#include "support.hpp"

#include <doctest.h>

using namespace qdga;
using namespace qdga::testing;

TEST_CASE("d on generators and letters") {
  Session s = preset("scalar-twist");
  const Calculus& calc = *s.calculus;
  for (Gen i = 0; i < 2; ++i) {
    CHECK(diff(calc, Tensor(x(i))) == dx(i));
    CHECK(diff(calc, dx(i)) == d2x(i));
    CHECK(diff(calc, d2x(i)).is_zero());
    CHECK(diff_n(calc, Tensor(x(i)), 3).is_zero());
  }
  CHECK(diff(calc, Tensor(Poly(Cyc(5)))).is_zero());
  CHECK_THROWS(diff_n(calc, dx(0), 0));
}

TEST_CASE("d agrees with d1 on algebra elements") {
  Sampler smp(61);
  Session s = make_session(mixed_config());
  for (int t = 0; t < 30; ++t) {
    const Poly u = smp.poly(2, 3);
    CHECK(diff(*s.calculus, Tensor(u)) == s.calculus->d1(u));
    CHECK(diff(*s.calculus, Tensor(u)) == d_expansion(*s.calculus, u));
  }
}

TEST_CASE("d is linear and raises the grade by one") {
  Sampler smp(62);
  Session s = make_session(mixed_config());
  const Calculus& calc = *s.calculus;
  for (int t = 0; t < 40; ++t) {
    const Tensor a = smp.mixed(2, 3, 2), b = smp.mixed(2, 3, 2);
    const Cyc c = smp.scalar();
    CHECK(diff(calc, a + c * b) == diff(calc, a) + c * diff(calc, b));
    const int g = static_cast<int>(smp.integer(0, 3));
    const Tensor h = smp.form(2, g, 2);
    const Tensor dh = diff(calc, h);
    if (!dh.is_zero()) CHECK(dh.homogeneous_grade() == g + 1);
  }
}

TEST_CASE("commutative second differential of x1 x2") {
  Session s = preset("commutative");
  const Cyc q = Cyc::q();
  const Tensor expected = q * multiply(*s.xi, dx(0), dx(1)) + q * multiply(*s.xi, dx(1), dx(0)) +
                          d2x(0, x(1)) + d2x(1, x(0));
  CHECK(diff_n(*s.calculus, Tensor(word({0, 1})), 2) == expected);
}

TEST_CASE("iterates match their closed forms") {
  Sampler smp(63);
  for (const auto& cfg : {preset_config("commutative"), preset_config("constant"), mixed_config(),
                          quadratic_config()}) {
    Session s = make_session(cfg);
    const Calculus& calc = *s.calculus;
    for (int t = 0; t < 12; ++t) {
      const Poly u = smp.poly(2, 3);
      CHECK(diff_n(calc, Tensor(u), 2) == d2_expansion(calc, u));
      CHECK(diff_n(calc, Tensor(u), 3) == d3_expansion(calc, u));
    }
  }
}

TEST_CASE("d cubed does not vanish before passing to the quotient") {
  Session s = preset("commutative");
  CHECK_FALSE(diff_n(*s.calculus, Tensor(word({0, 1})), 3).is_zero());
  CHECK_FALSE(diff_n(*s.calculus, Tensor(word({0, 0})), 3).is_zero());
}

TEST_CASE("graded Leibniz rule holds exactly against algebra elements") {
  Sampler smp(64);
  for (const auto& cfg : {preset_config("scalar-twist"), mixed_config()}) {
    Session s = make_session(cfg);
    const Calculus& calc = *s.calculus;
    const XiHomomorphism& xi = *s.xi;
    for (int t = 0; t < 25; ++t) {
      const int g = static_cast<int>(smp.integer(0, 3));
      const Tensor w = smp.form(2, g, 2);
      const Poly u = smp.poly(2, 2);
      CHECK(diff(calc, w * u) == diff(calc, w) * u + q_power(g) * multiply(xi, w, diff(calc, Tensor(u))));
    }
  }
}

TEST_CASE("graded Leibniz rule holds exactly for constant-coefficient forms") {
  Sampler smp(65);
  Session s = make_session(mixed_config());
  const Calculus& calc = *s.calculus;
  const XiHomomorphism& xi = *s.xi;
  for (int t = 0; t < 25; ++t) {
    const int g = static_cast<int>(smp.integer(1, 3));
    const Tensor w = Tensor::monomial(smp.dword(2, g), Poly(smp.nonzero_scalar()));
    const Tensor th = smp.mixed(2, 2, 2);
    CHECK(diff(calc, multiply(xi, w, th)) ==
          multiply(xi, diff(calc, w), th) + q_power(g) * multiply(xi, w, diff(calc, th)));
  }
}

TEST_CASE("xi-entry differentials") {
  Session s = preset("commutative");
  // xi_k^{12} = delta^2_k x^1, so d xi_2^{12} = dx^1.
  CHECK(d_xi(*s.calculus, 0, 1, 1) == dx(0));
  CHECK(d_xi(*s.calculus, 0, 1, 0).is_zero());
  CHECK(d2_xi(*s.calculus, 0, 1, 1) == d2x(0));
  CHECK(d3_xi(*s.calculus, 0, 1, 1).is_zero());
}
