#pragma once

#include "qdga/ideal.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qdga {

/// Order on d-letters used to orient rewrite rules: by grade, then by index
/// ascending or descending. Two-letter words compare lexicographically.
enum class LetterOrder { Ascending, Descending };

class RewriteNotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StepBudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// lhs -> rhs, where rhs is a Q(q)-combination of two-letter words that are
/// all smaller than lhs.
struct RewriteRule {
  DWord lhs;
  std::vector<std::pair<DWord, Cyc>> rhs;
};

/// Normal forms modulo I_q for xi with affine entries. There every generator
/// is a constant-coefficient combination of two-letter words; the generators
/// of each grade are interreduced so that each rule rewrites one two-letter
/// factor into strictly smaller ones. Rewriting keeps word length and grade,
/// so it always terminates; the step budget guards against huge inputs.
class Reducer {
 public:
  /// Throws RewriteNotApplicable when some d(xi_k^{ij}) has non-constant
  /// coefficients.
  explicit Reducer(const Ideal& ideal, LetterOrder order = LetterOrder::Ascending);

  const std::vector<RewriteRule>& rules() const { return rules_; }
  LetterOrder order() const { return order_; }

  struct Result {
    Tensor normal_form;
    std::size_t steps = 0;
  };

  /// Throws StepBudgetExhausted after max_steps rewrites.
  Result reduce(const Tensor& e, std::size_t max_steps = 100000) const;
  bool is_normal(const Tensor& e) const;

  bool letter_less(const DLetter& a, const DLetter& b) const;
  bool word_less(const DWord& a, const DWord& b) const;

 private:
  std::optional<std::size_t> first_redex(const DWord& w, std::size_t* rule) const;

  LetterOrder order_;
  std::vector<RewriteRule> rules_;
  std::map<std::pair<DLetter, DLetter>, std::size_t> by_lhs_;
};

}  // namespace qdga
