#pragma once

#include "qdga/calculus.hpp"
#include "qdga/tensor.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qdga {

/// Generator families of the d-compatible ideal I_q. The relations
/// u·d^a x^j = d^a x^k xi(u)^j_k hold identically in the canonical
/// representation and are therefore not listed.
enum class Family {
  Rel1,   // dx^i dx^j - q dx^k d(xi_k^{ij})                                  grade 2
  Rel22,  // dx^i d^2x^j - q^2 d^2x^k d(xi_k^{ij})                           grade 3
  Rel2,   // d^2x^i dx^j + (1-q) d^2x^k d(xi_k^{ij}) - q^2 dx^k d^2(xi_k^{ij})  grade 3
  Rel3,   // d^3(xi_k^{ij})                                                  grade 3
  Rel4,   // d^2x^i d^2x^j - q d^2x^k d^2(xi_k^{ij})                          grade 4
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
int family_grade(Family f);

struct GeneratorId {
  Family family = Family::Rel1;
  Gen i = 0;
  Gen j = 0;
  Gen k = 0;  // only meaningful for Rel3
  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

std::string to_string(const GeneratorId& id);

class Ideal {
 public:
  explicit Ideal(std::shared_ptr<const Calculus> calc);

  const Calculus& calculus() const { return *calc_; }
  const XiHomomorphism& xi() const { return calc_->xi(); }
  std::size_t rank() const { return calc_->rank(); }

  const Tensor& generator(const GeneratorId& id) const;
  /// rel1, rel-2-2, rel2, rel3 (all k), rel4 for the pair (i, j).
  std::vector<std::pair<GeneratorId, Tensor>> ideal_generators(Gen i, Gen j) const;
  /// Every generator id, including those whose element vanishes.
  const std::vector<GeneratorId>& all_ids() const { return ids_; }

 private:
  Tensor build(const GeneratorId& id) const;

  std::shared_ptr<const Calculus> calc_;
  std::vector<GeneratorId> ids_;
  std::map<GeneratorId, Tensor> generators_;
};

// --- membership oracle -----------------------------------------------------

struct Bounds {
  /// Largest total grade of l·g·r considered; negative means "grade of e".
  int grade_bound = -1;
  /// Largest combined word length of the left and right multipliers;
  /// negative means "word degree of e plus the largest xi entry degree".
  int word_bound = -1;
  std::size_t size_cap = 200000;
};

/// coefficient · (left_dword · left_word) · generator · (right_dword · right_word)
struct WitnessTerm {
  DWord left_dword;
  Word left_word;
  GeneratorId generator;
  DWord right_dword;
  Word right_word;
  Cyc coefficient;
};

struct Witness {
  std::vector<WitnessTerm> terms;
};

/// Re-expands a witness with the tensor product; used to audit certificates.
Tensor expand(const Ideal& ideal, const Witness& witness);

enum class MembershipStatus { Member, NotMemberAtBound, BoundExceeded };
const char* status_name(MembershipStatus s);

struct MembershipVerdict {
  MembershipStatus status = MembershipStatus::NotMemberAtBound;
  std::optional<Witness> witness;  // present iff status == Member
  Bounds bounds;                   // bounds actually used
  std::size_t spanning_size = 0;
};

Bounds resolve_bounds(const Ideal& ideal, const Tensor& e, Bounds requested);

/// Decides whether e lies in the span of { l·g·r } over generators g and
/// monomial multipliers l, r within the bounds, by exact elimination over
/// Q(q). `Member` verdicts carry a witness that re-expands to e exactly;
/// `NotMemberAtBound` is conclusive only relative to the bounds.
MembershipVerdict membership(const Ideal& ideal, const Tensor& e, Bounds bounds = {});

/// All d-words of the given grade over n generators, in DWordLess order.
std::vector<DWord> dwords_of_grade(std::size_t n, int grade);

}  // namespace qdga
