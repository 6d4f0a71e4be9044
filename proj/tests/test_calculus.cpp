#include "support.hpp"

#include <doctest.h>

using namespace qdga;
using namespace qdga::testing;

namespace {

// For the commutative preset D_k deletes one occurrence of x^k in every possible position.
Poly deletion_derivative(Gen k, const Poly& v) {
  Poly out;
  for (const auto& [w, c] : v.terms())
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w[p] == k) {
        Word r = w;
        r.erase(r.begin() + static_cast<long>(p));
        out.add_term(r, c);
      }
  return out;
}

}  // namespace

TEST_CASE("commutative partials delete one letter") {
  Session s = preset("commutative");
  Sampler smp(41);
  for (int t = 0; t < 60; ++t) {
    const Poly v = smp.poly(2, 4);
    for (Gen k = 0; k < 2; ++k) CHECK(s.calculus->partial(k, v) == deletion_derivative(k, v));
  }
  CHECK(s.calculus->partial(0, word({0, 0})) == x(0) * Cyc(2));
}

TEST_CASE("twisted Leibniz rule for D_k") {
  Sampler smp(42);
  for (const auto& cfg : {preset_config("scalar-twist"), preset_config("constant"), mixed_config(),
                          quadratic_config()}) {
    Session s = make_session(cfg);
    const Calculus& calc = *s.calculus;
    for (int t = 0; t < 25; ++t) {
      const Poly u = smp.poly(2, 2), v = smp.poly(2, 2);
      const XiMatrix m = s.xi->apply(u);
      for (Gen k = 0; k < 2; ++k) {
        Poly rhs = calc.partial(k, u) * v;
        for (Gen j = 0; j < 2; ++j) rhs += m.at(k, j) * calc.partial(j, v);
        CHECK(calc.partial(k, u * v) == rhs);
      }
    }
  }
}

TEST_CASE("first and second order differentials obey Leibniz") {
  Sampler smp(43);
  Session s = make_session(mixed_config());
  const Calculus& calc = *s.calculus;
  for (int t = 0; t < 25; ++t) {
    const Poly u = smp.poly(2, 2), v = smp.poly(2, 2);
    CHECK(calc.d1(u * v) == calc.d1(u) * v + left_multiply(*s.xi, u, calc.d1(v)));
    CHECK(calc.d2_tilde(u * v) == calc.d2_tilde(u) * v + left_multiply(*s.xi, u, calc.d2_tilde(v)));
  }
}

TEST_CASE("partials of constants and generators") {
  Session s = preset("constant");
  CHECK(s.calculus->partial(0, Poly(Cyc(7))).is_zero());
  CHECK(s.calculus->partial(1, x(1)) == Poly::one());
  CHECK(s.calculus->partial(0, x(1)).is_zero());
  CHECK(s.calculus->partial_chain({0, 1}, word({0, 1})) ==
        s.calculus->partial(1, s.calculus->partial(0, word({0, 1}))));
  CHECK_THROWS_AS(s.calculus->partial(2, x(0)), ConfigError);
}
