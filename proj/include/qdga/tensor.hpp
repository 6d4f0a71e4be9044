#pragma once

#include "qdga/freealg.hpp"
#include "qdga/xi.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace qdga {

/// dx^i (grade 1) or d^2x^i (grade 2). Grade-3 letters do not exist.
struct DLetter {
  std::uint8_t grade = 1;
  Gen index = 0;
  friend auto operator<=>(const DLetter&, const DLetter&) = default;
};

/// d^{a_1}x^{i_1} (x) ... (x) d^{a_m}x^{i_m}; the empty word is the grade-0 slot.
using DWord = std::vector<DLetter>;

int dword_grade(const DWord& w);
DWord concat(const DWord& a, const DWord& b);

/// Grade vector lexicographically, then index vector.
struct DWordLess {
  bool operator()(const DWord& a, const DWord& b) const;
};

/// Element of the tensor algebra over A of E = M ⊕ M2, held in the canonical
/// decomposition: every monomial is a d-word followed by a single right
/// coefficient in A. Two elements are equal iff their term maps are equal.
class Tensor {
 public:
  using Terms = std::map<DWord, Poly, DWordLess>;

  Tensor() = default;
  Tensor(Poly u);  // NOLINT(google-explicit-constructor)

  static Tensor letter(int grade, Gen index, Poly coeff = Poly::one());
  static Tensor monomial(DWord w, Poly coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const DWord& w, const Poly& coeff);

  /// Partition by d-word grade; the parts sum back to *this.
  std::map<int, Tensor> grade_components() const;
  /// Grade of a nonzero homogeneous element.
  std::optional<int> homogeneous_grade() const;
  int max_grade() const;
  /// Largest word degree among right coefficients (0 for the zero element).
  std::size_t max_word_degree() const;
  /// Largest generator index used plus one, in letters and coefficients.
  std::size_t generator_span() const;

  Tensor operator-() const;
  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Cyc& c);
  /// Right action of A: multiplies every right coefficient.
  Tensor& operator*=(const Poly& u);

  friend Tensor operator+(Tensor x, const Tensor& y) { return x += y; }
  friend Tensor operator-(Tensor x, const Tensor& y) { return x -= y; }
  friend Tensor operator*(Tensor x, const Cyc& c) { return x *= c; }
  friend Tensor operator*(const Cyc& c, Tensor x) { return x *= c; }
  friend Tensor operator*(Tensor x, const Poly& u) { return x *= u; }
  friend bool operator==(const Tensor& x, const Tensor& y) { return x.terms_ == y.terms_; }

 private:
  Terms terms_;
};

/// u · (w · r), with u pushed rightwards through every letter of w.
Tensor push_through(const XiHomomorphism& xi, const Poly& u, const DWord& w, const Poly& r);

/// Left action of A.
Tensor left_multiply(const XiHomomorphism& xi, const Poly& u, const Tensor& t);

/// Graded product of the tensor algebra. Left coefficients are pushed through
/// the right factor's letters so the result stays canonical.
Tensor multiply(const XiHomomorphism& xi, const Tensor& a, const Tensor& b);

template <class... Rest>
Tensor multiply(const XiHomomorphism& xi, const Tensor& a, const Tensor& b, const Rest&... rest) {
  return multiply(xi, multiply(xi, a, b), rest...);
}

}  // namespace qdga
