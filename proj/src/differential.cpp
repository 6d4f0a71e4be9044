#include "qdga/differential.hpp"

#include <stdexcept>

namespace qdga {

namespace {

DLetter d1_letter(std::size_t i) { return DLetter{1, static_cast<Gen>(i)}; }
DLetter d2_letter(std::size_t i) { return DLetter{2, static_cast<Gen>(i)}; }

}  // namespace

Tensor diff(const Calculus& calc, const Tensor& w) {
  Tensor out;
  for (const auto& [word, r] : w.terms()) {
    int prefix_grade = 0;
    for (std::size_t j = 0; j < word.size(); ++j) {
      if (word[j].grade == 1) {
        DWord raised = word;
        raised[j].grade = 2;
        out.add_term(raised, r * q_power(prefix_grade));
      }
      prefix_grade += word[j].grade;
    }
    const Cyc tail_weight = q_power(prefix_grade);
    for (std::size_t s = 0; s < calc.rank(); ++s) {
      Poly ds = calc.partial(static_cast<Gen>(s), r);
      if (ds.is_zero()) continue;
      DWord extended = word;
      extended.push_back(d1_letter(s));
      out.add_term(extended, ds * tail_weight);
    }
  }
  return out;
}

Tensor diff_n(const Calculus& calc, const Tensor& w, int times) {
  if (times < 1) throw std::invalid_argument("diff_n needs times >= 1");
  Tensor r = w;
  for (int t = 0; t < times; ++t) r = diff(calc, r);
  return r;
}

Tensor d_expansion(const Calculus& calc, const Poly& u) {
  Tensor t;
  for (std::size_t l = 0; l < calc.rank(); ++l)
    t.add_term({d1_letter(l)}, calc.partial(static_cast<Gen>(l), u));
  return t;
}

Tensor d2_expansion(const Calculus& calc, const Poly& u) {
  Tensor t;
  const Cyc q = Cyc::q();
  for (std::size_t l = 0; l < calc.rank(); ++l) {
    Poly dl = calc.partial(static_cast<Gen>(l), u);
    t.add_term({d2_letter(l)}, dl);
    for (std::size_t m = 0; m < calc.rank(); ++m)
      t.add_term({d1_letter(l), d1_letter(m)}, calc.partial(static_cast<Gen>(m), dl) * q);
  }
  return t;
}

Tensor d3_expansion(const Calculus& calc, const Poly& u) {
  Tensor t;
  const Cyc c21 = Cyc::q() * q_integer(2);
  const Cyc c12 = q_power(2);
  for (std::size_t l = 0; l < calc.rank(); ++l) {
    Poly dl = calc.partial(static_cast<Gen>(l), u);
    if (dl.is_zero()) continue;
    for (std::size_t m = 0; m < calc.rank(); ++m) {
      Poly dml = calc.partial(static_cast<Gen>(m), dl);
      if (dml.is_zero()) continue;
      t.add_term({d2_letter(l), d1_letter(m)}, dml * c21);
      t.add_term({d1_letter(l), d2_letter(m)}, dml * c12);
      for (std::size_t p = 0; p < calc.rank(); ++p)
        t.add_term({d1_letter(l), d1_letter(m), d1_letter(p)},
                   calc.partial(static_cast<Gen>(p), dml));
    }
  }
  return t;
}

Tensor d_xi(const Calculus& calc, Gen i, Gen j, Gen k) {
  return d_expansion(calc, calc.xi().entry(i, k, j));
}

Tensor d2_xi(const Calculus& calc, Gen i, Gen j, Gen k) {
  return d2_expansion(calc, calc.xi().entry(i, k, j));
}

Tensor d3_xi(const Calculus& calc, Gen i, Gen j, Gen k) {
  return d3_expansion(calc, calc.xi().entry(i, k, j));
}

}  // namespace qdga
