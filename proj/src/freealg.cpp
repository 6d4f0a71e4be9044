#include "qdga/freealg.hpp"

#include <algorithm>
#include <string>

namespace qdga {

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Poly::Poly(Cyc c) {
  if (!c.is_zero()) terms_.emplace(Word{}, std::move(c));
}

Poly Poly::monomial(Word w, Cyc c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Cyc Poly::constant_term() const { return coefficient(Word{}); }

Cyc Poly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Cyc(0) : it->second;
}

std::size_t Poly::degree() const {
  if (terms_.empty()) throw EmptyElementError("degree of the zero element is undefined");
  // WordLess sorts by length first, so the last key is a longest word.
  return terms_.rbegin()->first.size();
}

std::size_t Poly::generator_span() const {
  std::size_t span = 0;
  for (const auto& [w, c] : terms_)
    for (Gen g : w) span = std::max<std::size_t>(span, g + 1u);
  return span;
}

void Poly::add_term(const Word& w, const Cyc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Poly& Poly::operator*=(const Cyc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
  Poly r;
  for (const auto& [wx, cx] : x.terms_)
    for (const auto& [wy, cy] : y.terms_) r.add_term(concat(wx, wy), cx * cy);
  return r;
}

FreeAlgebra::FreeAlgebra(std::size_t n) : n_(n) {
  if (n == 0) throw ConfigError("the free algebra needs at least one generator");
  if (n > 0xFFFF) throw ConfigError("too many generators");
}

void FreeAlgebra::check(const Poly& u) const {
  if (u.generator_span() > n_)
    throw ConfigError("generator x" + std::to_string(u.generator_span()) +
                      " is outside the configured algebra with n = " + std::to_string(n_));
}

std::vector<Word> FreeAlgebra::words_of_length(std::size_t len) const {
  std::vector<Word> out{Word{}};
  for (std::size_t step = 0; step < len; ++step) {
    std::vector<Word> next;
    next.reserve(out.size() * n_);
    for (const Word& w : out)
      for (std::size_t i = 0; i < n_; ++i) {
        Word e = w;
        e.push_back(static_cast<Gen>(i));
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Word> FreeAlgebra::words_up_to(std::size_t len) const {
  std::vector<Word> out;
  for (std::size_t l = 0; l <= len; ++l) {
    auto part = words_of_length(l);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace qdga
