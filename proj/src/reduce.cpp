#include "qdga/reduce.hpp"

#include <algorithm>
#include <string>

namespace qdga {

bool Reducer::letter_less(const DLetter& a, const DLetter& b) const {
  if (a.grade != b.grade) return a.grade < b.grade;
  return order_ == LetterOrder::Ascending ? a.index < b.index : a.index > b.index;
}

bool Reducer::word_less(const DWord& a, const DWord& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [this](const DLetter& x, const DLetter& y) { return letter_less(x, y); });
}

Reducer::Reducer(const Ideal& ideal, LetterOrder order) : order_(order) {
  if (!ideal.xi().is_affine())
    throw RewriteNotApplicable(
        "rewriting needs xi entries of word degree <= 1 (constant d(xi) coefficients)");

  std::map<int, std::vector<const Tensor*>> by_grade;
  for (const auto& id : ideal.all_ids()) {
    const Tensor& g = ideal.generator(id);
    if (g.is_zero()) continue;
    for (const auto& [w, c] : g.terms())
      if (w.size() != 2 || !c.is_constant())
        throw RewriteNotApplicable("generator " + to_string(id) +
                                   " is not a constant combination of two-letter words");
    by_grade[*g.homogeneous_grade()].push_back(&g);
  }

  for (const auto& [grade, gens] : by_grade) {
    std::vector<DWord> cols;
    for (const DWord& w : dwords_of_grade(ideal.rank(), grade))
      if (w.size() == 2) cols.push_back(w);
    // Largest first, so the pivot of each row is its leading word.
    std::sort(cols.begin(), cols.end(),
              [this](const DWord& a, const DWord& b) { return word_less(b, a); });
    std::map<DWord, std::size_t> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = c;

    std::vector<std::vector<Cyc>> rows;
    for (const Tensor* g : gens) {
      std::vector<Cyc> row(cols.size());
      for (const auto& [w, c] : g->terms()) row[col_of.at(w)] = c.constant_term();
      rows.push_back(std::move(row));
    }

    // Reduced row echelon form.
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
      std::size_t p = rank;
      while (p < rows.size() && rows[p][c].is_zero()) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[rank]);
      const Cyc inv = rows[rank][c].inverse();
      for (auto& x : rows[rank]) x *= inv;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][c].is_zero()) continue;
        const Cyc f = rows[r][c];
        for (std::size_t cc = 0; cc < cols.size(); ++cc) rows[r][cc] -= f * rows[rank][cc];
      }
      pivots.push_back(c);
      ++rank;
    }

    for (std::size_t r = 0; r < rank; ++r) {
      RewriteRule rule;
      rule.lhs = cols[pivots[r]];
      for (std::size_t c = pivots[r] + 1; c < cols.size(); ++c)
        if (!rows[r][c].is_zero()) rule.rhs.emplace_back(cols[c], -rows[r][c]);
      by_lhs_.emplace(std::make_pair(rule.lhs[0], rule.lhs[1]), rules_.size());
      rules_.push_back(std::move(rule));
    }
  }
}

std::optional<std::size_t> Reducer::first_redex(const DWord& w, std::size_t* rule) const {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    auto it = by_lhs_.find({w[p], w[p + 1]});
    if (it != by_lhs_.end()) {
      *rule = it->second;
      return p;
    }
  }
  return std::nullopt;
}

bool Reducer::is_normal(const Tensor& e) const {
  std::size_t rule = 0;
  return std::none_of(e.terms().begin(), e.terms().end(),
                      [&](const auto& t) { return first_redex(t.first, &rule).has_value(); });
}

Reducer::Result Reducer::reduce(const Tensor& e, std::size_t max_steps) const {
  Result result;
  Tensor pending = e;
  while (!pending.is_zero()) {
    auto node = pending.terms().begin();
    const DWord w = node->first;
    const Poly r = node->second;
    pending.add_term(w, -r);

    std::size_t rule_index = 0;
    auto pos = first_redex(w, &rule_index);
    if (!pos) {
      result.normal_form.add_term(w, r);
      continue;
    }
    if (++result.steps > max_steps)
      throw StepBudgetExhausted("reduction exceeded " + std::to_string(max_steps) + " steps");
    for (const auto& [repl, c] : rules_[rule_index].rhs) {
      DWord next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*pos));
      next.insert(next.end(), repl.begin(), repl.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(*pos) + 2, w.end());
      pending.add_term(next, r * c);
    }
  }
  return result;
}

}  // namespace qdga
