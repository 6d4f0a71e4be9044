#include "support.hpp"

#include <doctest.h>

using namespace qdga;
using namespace qdga::testing;

namespace {

// xi of a word as the explicit product of generator matrices.
XiMatrix product_of_generators(const XiHomomorphism& xi, const Word& w) {
  XiMatrix m = XiMatrix::identity(xi.rank());
  for (Gen g : w) m = m * xi.generator_matrix(g);
  return m;
}

}  // namespace

TEST_CASE("preset generator matrices") {
  const Cyc q = Cyc::q();
  auto comm = XiHomomorphism::commutative(2);
  CHECK(comm.entry(0, 1, 1) == x(0));
  CHECK(comm.entry(0, 0, 1).is_zero());
  auto tw = XiHomomorphism::scalar_twist(2, q);
  CHECK(tw.entry(1, 0, 0) == x(1) * q);
  auto c = XiHomomorphism::constant(2);
  CHECK(c.entry(0, 1, 0) == Poly(q));
  CHECK(c.entry(0, 0, 0).is_zero());
  CHECK(c.entry(1, 1, 1) == Poly(q * q));
  CHECK(c.max_entry_degree() == 0);
  CHECK(comm.max_entry_degree() == 1);
}

TEST_CASE("xi is multiplicative") {
  Sampler s(31);
  for (const auto& cfg : {preset_config("commutative"), preset_config("constant"), mixed_config(),
                          quadratic_config()}) {
    auto xi = build_xi(cfg);
    CHECK(xi->apply(Poly::one()) == XiMatrix::identity(2));
    for (int t = 0; t < 40; ++t) {
      const Poly a = s.poly(2, 2), b = s.poly(2, 2);
      CHECK(xi->apply(a * b) == xi->apply(a) * xi->apply(b));
      const Word w = s.word(2, 4);
      CHECK(xi->apply_word(w) == product_of_generators(*xi, w));
    }
  }
}

TEST_CASE("push-through is the same for both letter grades") {
  Sampler s(32);
  auto xi = build_xi(mixed_config());
  for (int t = 0; t < 30; ++t) {
    const Poly u = s.poly(2, 2);
    for (Gen j = 0; j < 2; ++j) {
      auto one = xi->push_coefficient(u, 1, j);
      auto two = xi->push_coefficient(u, 2, j);
      CHECK(one == two);
      Tensor via_push, via_matrix;
      for (const auto& [k, c] : one) via_push += dx(k, c);
      const XiMatrix m = xi->apply(u);
      for (Gen k = 0; k < 2; ++k) via_matrix += dx(k, m.at(k, j));
      CHECK(via_push == via_matrix);
    }
  }
  CHECK_THROWS(xi->push_coefficient(x(0), 3, 0));
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(XiHomomorphism(2, {XiMatrix(2)}), ConfigError);
  CHECK_THROWS_AS(XiHomomorphism(2, {XiMatrix(2), XiMatrix(3)}), ConfigError);
  XiMatrix bad(2);
  bad.at(0, 0) = x(5);
  CHECK_THROWS_AS(XiHomomorphism(2, {bad, XiMatrix(2)}), ConfigError);
}
