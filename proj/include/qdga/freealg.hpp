#pragma once

#include "qdga/scalar.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace qdga {

/// Zero-based generator index; x^(i+1) in the usual one-based notation.
using Gen = std::uint16_t;

/// Monomial of the free algebra. The empty word is the unit.
using Word = std::vector<Gen>;

/// Length first, then lexicographic on indices.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

Word concat(const Word& a, const Word& b);

class EmptyElementError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Noncommutative polynomial in the free generators over Q(q), stored as a
/// sparse map word -> nonzero coefficient.
class Poly {
 public:
  using Terms = std::map<Word, Cyc, WordLess>;

  Poly() = default;
  Poly(Cyc c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Cyc(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly one() { return Poly(1); }
  static Poly generator(Gen i) { return monomial(Word{i}, Cyc(1)); }
  static Poly monomial(Word w, Cyc c = Cyc(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True for elements in Q(q)·1 (including zero).
  bool is_constant() const;
  /// Coefficient of the empty word.
  Cyc constant_term() const;
  Cyc coefficient(const Word& w) const;

  /// Maximum word length; throws EmptyElementError on zero.
  std::size_t degree() const;
  /// Largest generator index used plus one; 0 for constants.
  std::size_t generator_span() const;

  void add_term(const Word& w, const Cyc& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Cyc& c);

  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(Poly x, const Cyc& c) { return x *= c; }
  friend Poly operator*(const Cyc& c, Poly x) { return x *= c; }
  friend Poly operator*(const Poly& x, const Poly& y);
  friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }

 private:
  Terms terms_;
};

/// The free algebra on n generators; validates that elements stay inside it.
class FreeAlgebra {
 public:
  explicit FreeAlgebra(std::size_t n);
  std::size_t rank() const { return n_; }
  /// Throws ConfigError if any generator index is out of range.
  void check(const Poly& u) const;
  /// All words of exactly the given length, in WordLess order.
  std::vector<Word> words_of_length(std::size_t len) const;
  std::vector<Word> words_up_to(std::size_t len) const;

 private:
  std::size_t n_;
};

}  // namespace qdga
