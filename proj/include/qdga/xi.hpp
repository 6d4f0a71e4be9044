#pragma once

#include "qdga/freealg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace qdga {

/// Square matrix over the free algebra. Entry (k, j) of xi(u) is the
/// coefficient that appears in u·dx^j = sum_k dx^k xi(u)^j_k.
class XiMatrix {
 public:
  XiMatrix() = default;
  explicit XiMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static XiMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  const Poly& at(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }
  Poly& at(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }

  XiMatrix& operator+=(const XiMatrix& o);
  XiMatrix& operator*=(const Cyc& c);
  friend XiMatrix operator*(const XiMatrix& a, const XiMatrix& b);
  friend bool operator==(const XiMatrix& a, const XiMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Poly> data_;
};

/// The algebra homomorphism xi: A -> Mat_n(A), fixed by its values on the
/// generators and extended multiplicatively, xi(uv) = xi(u)·xi(v).
///
/// Any choice of generator matrices is valid because A is free; construction
/// only checks shapes and generator indices.
class XiHomomorphism {
 public:
  XiHomomorphism(std::size_t n, std::vector<XiMatrix> generator_matrices);

  /// xi_k^{ij} = delta^j_k x^i: functions commute with differentials.
  static XiHomomorphism commutative(std::size_t n);
  /// xi_k^{ij} = c·delta^j_k x^i.
  static XiHomomorphism scalar_twist(std::size_t n, const Cyc& c);
  /// Scalar generator matrices: xi(x^i) = q^(i+1) times the cyclic shift
  /// permutation sending column j to row (j + i + 1) mod n.
  static XiHomomorphism constant(std::size_t n);

  std::size_t rank() const { return algebra_.rank(); }
  const FreeAlgebra& algebra() const { return algebra_; }

  const XiMatrix& generator_matrix(Gen i) const { return gens_.at(i); }
  /// xi_k^{ij} = (xi(x^i))^j_k.
  const Poly& entry(Gen i, Gen k, Gen j) const { return gens_.at(i).at(k, j); }

  XiMatrix apply(const Poly& u) const;
  /// Memoized value on a single word.
  XiMatrix apply_word(const Word& w) const;

  /// Coefficients c_k with u·d^grade x^j = sum_k d^grade x^k c_k. The grade is
  /// accepted for interface symmetry: both bimodules use the same xi.
  std::vector<std::pair<Gen, Poly>> push_coefficient(const Poly& u, int grade, Gen j) const;

  /// Largest word degree among the generator-matrix entries (0 if all vanish).
  std::size_t max_entry_degree() const;
  /// True when every entry has word degree at most one, so that every
  /// d(xi_k^{ij}) has constant coefficients.
  bool is_affine() const { return max_entry_degree() <= 1; }

 private:
  FreeAlgebra algebra_;
  std::vector<XiMatrix> gens_;
  struct WordCache {
    std::mutex mutex;
    std::map<Word, XiMatrix, WordLess> values;
  };
  std::unique_ptr<WordCache> cache_ = std::make_unique<WordCache>();
};

}  // namespace qdga
