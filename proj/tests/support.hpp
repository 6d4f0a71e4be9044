#pragma once

#include "qdga/config.hpp"
#include "qdga/differential.hpp"
#include "qdga/tensor.hpp"

#include <complex>
#include <cstdint>
#include <random>

namespace qdga::testing {

inline Session preset(const std::string& name, std::size_t n = 2) {
  return make_session(preset_config(name, n));
}

/// Seeded sampler for test inputs; independent of the library's samplers.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Cyc scalar() {
    mpq_class a(integer(-4, 4), integer(1, 3));
    mpq_class b(integer(-4, 4), integer(1, 3));
    return Cyc(a, b);
  }

  Cyc nonzero_scalar() {
    for (;;) {
      Cyc c = scalar();
      if (!c.is_zero()) return c;
    }
  }

  Word word(std::size_t n, std::size_t max_len) {
    Word w(static_cast<std::size_t>(integer(0, static_cast<long>(max_len))));
    for (auto& g : w) g = static_cast<Gen>(integer(0, static_cast<long>(n) - 1));
    return w;
  }

  Poly poly(std::size_t n, std::size_t max_len, int max_terms = 3) {
    Poly p;
    const long t = integer(0, max_terms);
    for (long s = 0; s < t; ++s) p.add_term(word(n, max_len), scalar());
    return p;
  }

  DWord dword(std::size_t n, int grade) {
    DWord w;
    while (grade > 0) {
      const int a = grade == 1 ? 1 : static_cast<int>(integer(1, 2));
      w.push_back(DLetter{static_cast<std::uint8_t>(a), static_cast<Gen>(integer(0, static_cast<long>(n) - 1))});
      grade -= a;
    }
    return w;
  }

  /// Homogeneous element of the given grade.
  Tensor form(std::size_t n, int grade, std::size_t coeff_len, int max_terms = 2) {
    Tensor t;
    const long terms = integer(1, max_terms);
    for (long s = 0; s < terms; ++s) t += Tensor::monomial(dword(n, grade), poly(n, coeff_len, 2));
    return t;
  }

  /// Sum of homogeneous pieces of grades 0..max_grade.
  Tensor mixed(std::size_t n, int max_grade, std::size_t coeff_len) {
    Tensor t;
    for (int g = 0; g <= max_grade; ++g)
      if (integer(0, 1)) t += form(n, g, coeff_len, 1);
    return t;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Numerical image of a + b q at q = exp(2 pi i / 3).
inline std::complex<double> numeric(const Cyc& c) {
  const std::complex<double> q(-0.5, std::sqrt(3.0) / 2.0);
  return c.rational_part().get_d() + c.q_part().get_d() * q;
}

inline Tensor dx(Gen k, Poly c = Poly::one()) { return Tensor::letter(1, k, std::move(c)); }
inline Tensor d2x(Gen k, Poly c = Poly::one()) { return Tensor::letter(2, k, std::move(c)); }
inline Poly x(Gen k) { return Poly::generator(k); }
inline Poly word(std::initializer_list<Gen> w) { return Poly::monomial(Word(w)); }

}  // namespace qdga::testing

namespace qdga::testing {

/// A generic affine xi with non-diagonal, mixed entries, for n = 2.
inline SessionConfig mixed_config() {
  return config_from_json(nlohmann::json::parse(R"({"n": 2, "xi_entries": [
      [["x1", "x2"], ["0", "q*x1"]],
      [["x2", "0"], ["x1 - x2", "x2"]]]})"));
}

/// Entries of degree 2, which the reducer must refuse.
inline SessionConfig quadratic_config() {
  return config_from_json(nlohmann::json::parse(R"({"n": 2, "xi_entries": [
      [["x1*x1", "0"], ["0", "x1"]],
      [["x2", "0"], ["0", "x2*x1"]]]})"));
}

}  // namespace qdga::testing
