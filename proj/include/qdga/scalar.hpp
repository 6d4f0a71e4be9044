#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qdga {

/// Element a + b*q of the cyclotomic field Q(q), q a primitive cube root of
/// unity. The representation is canonical: q^2 is always rewritten as -1 - q.
class Cyc {
 public:
  Cyc() = default;
  Cyc(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Cyc(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static Cyc q() { return Cyc(0, 1); }

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& q_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Cyc operator-() const { return Cyc(-a_, -b_); }
  Cyc& operator+=(const Cyc& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Cyc& operator-=(const Cyc& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o) { return *this *= o.inverse(); }

  /// Throws std::domain_error on zero.
  Cyc inverse() const;
  /// Field norm a^2 - ab + b^2 (product with the Galois conjugate).
  mpq_class norm() const;
  /// Galois conjugate, q -> q^2.
  Cyc conjugate() const;

  friend Cyc operator+(Cyc x, const Cyc& y) { return x += y; }
  friend Cyc operator-(Cyc x, const Cyc& y) { return x -= y; }
  friend Cyc operator*(Cyc x, const Cyc& y) { return x *= y; }
  friend Cyc operator/(Cyc x, const Cyc& y) { return x /= y; }
  friend bool operator==(const Cyc& x, const Cyc& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// "a + b*q" with rationals as "p/r"; zero prints as "0".
  std::string to_string() const;
  /// Inverse of to_string. Accepts "a", "b*q", "q", "-q", "a + b*q",
  /// "a - b*q" and "[n]_q"; throws std::invalid_argument otherwise.
  static Cyc parse(std::string_view text);

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

/// q^k for any integer k; q^-1 = q^2.
Cyc q_power(long k);

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0 and [3]_q = 0.
Cyc q_integer(unsigned long n);

}  // namespace qdga
