#include "qdga/xi.hpp"

#include <string>

namespace qdga {

XiMatrix XiMatrix::identity(std::size_t n) {
  XiMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one();
  return m;
}

XiMatrix& XiMatrix::operator+=(const XiMatrix& o) {
  if (o.n_ != n_) throw ConfigError("xi matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

XiMatrix& XiMatrix::operator*=(const Cyc& c) {
  for (auto& e : data_) e *= c;
  return *this;
}

XiMatrix operator*(const XiMatrix& a, const XiMatrix& b) {
  if (a.n_ != b.n_) throw ConfigError("xi matrix dimension mismatch");
  XiMatrix r(a.n_);
  for (std::size_t l = 0; l < a.n_; ++l)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Poly& lhs = a.at(l, k);
      if (lhs.is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j) {
        const Poly& rhs = b.at(k, j);
        if (!rhs.is_zero()) r.at(l, j) += lhs * rhs;
      }
    }
  return r;
}

XiHomomorphism::XiHomomorphism(std::size_t n, std::vector<XiMatrix> generator_matrices)
    : algebra_(n), gens_(std::move(generator_matrices)) {
  if (gens_.size() != n)
    throw ConfigError("xi needs one matrix per generator: expected " + std::to_string(n) +
                      ", got " + std::to_string(gens_.size()));
  for (const auto& m : gens_) {
    if (m.dim() != n) throw ConfigError("xi generator matrices must be " + std::to_string(n) +
                                        "x" + std::to_string(n));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) algebra_.check(m.at(k, j));
  }
}

XiHomomorphism XiHomomorphism::commutative(std::size_t n) {
  return scalar_twist(n, Cyc(1));
}

XiHomomorphism XiHomomorphism::scalar_twist(std::size_t n, const Cyc& c) {
  std::vector<XiMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    XiMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) m.at(j, j) = Poly::generator(static_cast<Gen>(i)) * c;
    gens.push_back(std::move(m));
  }
  return XiHomomorphism(n, std::move(gens));
}

XiHomomorphism XiHomomorphism::constant(std::size_t n) {
  std::vector<XiMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    XiMatrix m(n);
    for (std::size_t j = 0; j < n; ++j)
      m.at((j + i + 1) % n, j) = Poly(q_power(static_cast<long>(i) + 1));
    gens.push_back(std::move(m));
  }
  return XiHomomorphism(n, std::move(gens));
}

XiMatrix XiHomomorphism::apply_word(const Word& w) const {
  if (w.empty()) return XiMatrix::identity(rank());
  if (w.size() == 1) return gens_.at(w.front());
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->values.find(w);
    if (it != cache_->values.end()) return it->second;
  }
  Word tail(w.begin() + 1, w.end());
  XiMatrix value = gens_.at(w.front()) * apply_word(tail);
  std::lock_guard lock(cache_->mutex);
  return cache_->values.try_emplace(w, std::move(value)).first->second;
}

XiMatrix XiHomomorphism::apply(const Poly& u) const {
  XiMatrix r(rank());
  for (const auto& [w, c] : u.terms()) {
    XiMatrix m = apply_word(w);
    m *= c;
    r += m;
  }
  return r;
}

std::vector<std::pair<Gen, Poly>> XiHomomorphism::push_coefficient(const Poly& u, int grade,
                                                                   Gen j) const {
  if (grade != 1 && grade != 2) throw std::invalid_argument("d-letter grade must be 1 or 2");
  if (j >= rank()) throw ConfigError("generator index out of range");
  XiMatrix m = apply(u);
  std::vector<std::pair<Gen, Poly>> out;
  for (std::size_t k = 0; k < rank(); ++k)
    if (!m.at(k, j).is_zero()) out.emplace_back(static_cast<Gen>(k), m.at(k, j));
  return out;
}

std::size_t XiHomomorphism::max_entry_degree() const {
  std::size_t deg = 0;
  for (const auto& m : gens_)
    for (std::size_t k = 0; k < rank(); ++k)
      for (std::size_t j = 0; j < rank(); ++j)
        if (!m.at(k, j).is_zero()) deg = std::max(deg, m.at(k, j).degree());
  return deg;
}

}  // namespace qdga
