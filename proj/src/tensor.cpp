#include "qdga/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdga {

int dword_grade(const DWord& w) {
  int g = 0;
  for (const auto& l : w) g += l.grade;
  return g;
}

DWord concat(const DWord& a, const DWord& b) {
  DWord w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

bool DWordLess::operator()(const DWord& a, const DWord& b) const {
  auto by_grade = [](const DLetter& x, const DLetter& y) { return x.grade < y.grade; };
  if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), by_grade)) return true;
  if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end(), by_grade)) return false;
  // Same grade vector, hence same length.
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].index != b[i].index) return a[i].index < b[i].index;
  return false;
}

Tensor::Tensor(Poly u) {
  if (!u.is_zero()) terms_.emplace(DWord{}, std::move(u));
}

Tensor Tensor::letter(int grade, Gen index, Poly coeff) {
  if (grade != 1 && grade != 2) throw std::invalid_argument("d-letters have grade 1 or 2 (d^3 x^i = 0)");
  return monomial(DWord{DLetter{static_cast<std::uint8_t>(grade), index}}, std::move(coeff));
}

Tensor Tensor::monomial(DWord w, Poly coeff) {
  Tensor t;
  if (!coeff.is_zero()) t.terms_.emplace(std::move(w), std::move(coeff));
  return t;
}

void Tensor::add_term(const DWord& w, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::map<int, Tensor> Tensor::grade_components() const {
  std::map<int, Tensor> parts;
  for (const auto& [w, c] : terms_) parts[dword_grade(w)].terms_.emplace(w, c);
  return parts;
}

std::optional<int> Tensor::homogeneous_grade() const {
  std::optional<int> g;
  for (const auto& [w, c] : terms_) {
    int wg = dword_grade(w);
    if (g && *g != wg) return std::nullopt;
    g = wg;
  }
  return g;
}

int Tensor::max_grade() const {
  int g = 0;
  for (const auto& [w, c] : terms_) g = std::max(g, dword_grade(w));
  return g;
}

std::size_t Tensor::max_word_degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, c.degree());
  return d;
}

std::size_t Tensor::generator_span() const {
  std::size_t span = 0;
  for (const auto& [w, c] : terms_) {
    span = std::max(span, c.generator_span());
    for (const auto& l : w) span = std::max<std::size_t>(span, l.index + 1u);
  }
  return span;
}

Tensor Tensor::operator-() const {
  Tensor r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Tensor& Tensor::operator*=(const Cyc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Tensor& Tensor::operator*=(const Poly& u) {
  Terms out;
  for (auto& [w, c] : terms_) {
    Poly p = c * u;
    if (!p.is_zero()) out.emplace(w, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

namespace {

void push_rec(const XiHomomorphism& xi, const Poly& u, const DWord& w, std::size_t pos,
              DWord& prefix, const Poly& r, Tensor& out) {
  if (u.is_zero()) return;
  if (u.is_constant()) {
    // xi(1) is the identity, so scalars pass through unchanged.
    DWord full = prefix;
    full.insert(full.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
    out.add_term(full, u * r);
    return;
  }
  if (pos == w.size()) {
    out.add_term(prefix, u * r);
    return;
  }
  const DLetter letter = w[pos];
  XiMatrix m = xi.apply(u);
  for (std::size_t k = 0; k < xi.rank(); ++k) {
    const Poly& c = m.at(k, letter.index);
    if (c.is_zero()) continue;
    prefix.push_back(DLetter{letter.grade, static_cast<Gen>(k)});
    push_rec(xi, c, w, pos + 1, prefix, r, out);
    prefix.pop_back();
  }
}

}  // namespace

Tensor push_through(const XiHomomorphism& xi, const Poly& u, const DWord& w, const Poly& r) {
  Tensor out;
  DWord prefix;
  prefix.reserve(w.size());
  push_rec(xi, u, w, 0, prefix, r, out);
  return out;
}

Tensor left_multiply(const XiHomomorphism& xi, const Poly& u, const Tensor& t) {
  Tensor out;
  for (const auto& [w, c] : t.terms()) out += push_through(xi, u, w, c);
  return out;
}

Tensor multiply(const XiHomomorphism& xi, const Tensor& a, const Tensor& b) {
  Tensor out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Tensor pushed = push_through(xi, ca, wb, cb);
      for (const auto& [wp, cp] : pushed.terms()) out.add_term(concat(wa, wp), cp);
    }
  return out;
}

}  // namespace qdga
