#pragma once

#include "qdga/freealg.hpp"
#include "qdga/tensor.hpp"
#include "qdga/xi.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace qdga {

/// Coordinate first-order calculus on the free algebra together with its
/// canonical second-order companion, both driven by the same xi.
class Calculus {
 public:
  explicit Calculus(std::shared_ptr<const XiHomomorphism> xi);

  const XiHomomorphism& xi() const { return *xi_; }
  std::shared_ptr<const XiHomomorphism> xi_ptr() const { return xi_; }
  std::size_t rank() const { return xi_->rank(); }

  /// Right partial derivative D_k, from D_k(x^i v) = delta^i_k v + xi(x^i)^j_k D_j(v).
  Poly partial(Gen k, const Poly& v) const;
  /// D_k on a single word; memoized per (k, word).
  Poly partial_word(Gen k, const Word& w) const;
  /// D_{k_m}(...D_{k_1}(v)): the first index is applied first.
  Poly partial_chain(std::initializer_list<Gen> ks, const Poly& v) const;

  /// d^1 v = dx^k D_k(v).
  Tensor d1(const Poly& v) const;
  /// d~^2 v = d^2x^k D_k(v).
  Tensor d2_tilde(const Poly& v) const;

 private:
  std::shared_ptr<const XiHomomorphism> xi_;
  struct Memo {
    std::mutex mutex;
    std::map<std::pair<Gen, Word>, Poly> values;
  };
  std::unique_ptr<Memo> memo_ = std::make_unique<Memo>();
};

}  // namespace qdga
