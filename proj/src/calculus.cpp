#include "qdga/calculus.hpp"

#include <stdexcept>

namespace qdga {

Calculus::Calculus(std::shared_ptr<const XiHomomorphism> xi) : xi_(std::move(xi)) {
  if (!xi_) throw std::invalid_argument("calculus needs a xi homomorphism");
}

Poly Calculus::partial_word(Gen k, const Word& w) const {
  if (w.empty()) return Poly();
  if (w.size() == 1) return w.front() == k ? Poly::one() : Poly();
  auto key = std::make_pair(k, w);
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->values.find(key);
    if (it != memo_->values.end()) return it->second;
  }
  const Gen lead = w.front();
  Word tail(w.begin() + 1, w.end());
  Poly result;
  if (lead == k) result += Poly::monomial(tail);
  for (std::size_t j = 0; j < rank(); ++j) {
    const Poly& twist = xi_->entry(lead, k, static_cast<Gen>(j));
    if (twist.is_zero()) continue;
    Poly dj = partial_word(static_cast<Gen>(j), tail);
    if (!dj.is_zero()) result += twist * dj;
  }
  std::lock_guard lock(memo_->mutex);
  return memo_->values.try_emplace(std::move(key), std::move(result)).first->second;
}

Poly Calculus::partial(Gen k, const Poly& v) const {
  if (k >= rank()) throw ConfigError("partial derivative index out of range");
  Poly out;
  for (const auto& [w, c] : v.terms()) out += partial_word(k, w) * c;
  return out;
}

Poly Calculus::partial_chain(std::initializer_list<Gen> ks, const Poly& v) const {
  Poly r = v;
  for (Gen k : ks) r = partial(k, r);
  return r;
}

Tensor Calculus::d1(const Poly& v) const {
  Tensor t;
  for (std::size_t k = 0; k < rank(); ++k)
    t.add_term(DWord{DLetter{1, static_cast<Gen>(k)}}, partial(static_cast<Gen>(k), v));
  return t;
}

Tensor Calculus::d2_tilde(const Poly& v) const {
  Tensor t;
  for (std::size_t k = 0; k < rank(); ++k)
    t.add_term(DWord{DLetter{2, static_cast<Gen>(k)}}, partial(static_cast<Gen>(k), v));
  return t;
}

}  // namespace qdga
