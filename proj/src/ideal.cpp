#include "qdga/ideal.hpp"

#include "qdga/differential.hpp"
#include "qdga/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdga {

const char* family_name(Family f) {
  switch (f) {
    case Family::Rel1:
      return "rel1";
    case Family::Rel22:
      return "rel-2-2";
    case Family::Rel2:
      return "rel2";
    case Family::Rel3:
      return "rel3";
    case Family::Rel4:
      return "rel4";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::Rel1, Family::Rel22, Family::Rel2, Family::Rel3, Family::Rel4})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

int family_grade(Family f) {
  switch (f) {
    case Family::Rel1:
      return 2;
    case Family::Rel4:
      return 4;
    default:
      return 3;
  }
}

std::string to_string(const GeneratorId& id) {
  std::string s = std::string(family_name(id.family)) + "(" + std::to_string(id.i + 1) + "," +
                  std::to_string(id.j + 1);
  if (id.family == Family::Rel3) s += "," + std::to_string(id.k + 1);
  return s + ")";
}

Ideal::Ideal(std::shared_ptr<const Calculus> calc) : calc_(std::move(calc)) {
  if (!calc_) throw std::invalid_argument("ideal needs a calculus");
  const auto n = static_cast<Gen>(rank());
  for (Gen i = 0; i < n; ++i)
    for (Gen j = 0; j < n; ++j) {
      ids_.push_back({Family::Rel1, i, j, 0});
      ids_.push_back({Family::Rel22, i, j, 0});
      ids_.push_back({Family::Rel2, i, j, 0});
      for (Gen k = 0; k < n; ++k) ids_.push_back({Family::Rel3, i, j, k});
      ids_.push_back({Family::Rel4, i, j, 0});
    }
  for (const auto& id : ids_) generators_.emplace(id, build(id));
}

Tensor Ideal::build(const GeneratorId& id) const {
  const Calculus& calc = *calc_;
  const XiHomomorphism& xi = calc.xi();
  const Cyc q = Cyc::q();
  const Cyc q2 = q_power(2);
  auto sum_over_k = [&](int letter_grade, auto expansion) {
    Tensor s;
    for (std::size_t k = 0; k < rank(); ++k)
      s += multiply(xi, Tensor::letter(letter_grade, static_cast<Gen>(k)),
                    expansion(calc, id.i, id.j, static_cast<Gen>(k)));
    return s;
  };
  switch (id.family) {
    case Family::Rel1:
      return multiply(xi, Tensor::letter(1, id.i), Tensor::letter(1, id.j)) -
             sum_over_k(1, d_xi) * q;
    case Family::Rel22:
      return multiply(xi, Tensor::letter(1, id.i), Tensor::letter(2, id.j)) -
             sum_over_k(2, d_xi) * q2;
    case Family::Rel2:
      return multiply(xi, Tensor::letter(2, id.i), Tensor::letter(1, id.j)) +
             sum_over_k(2, d_xi) * (Cyc(1) - q) - sum_over_k(1, d2_xi) * q2;
    case Family::Rel3:
      return d3_xi(calc, id.i, id.j, id.k);
    case Family::Rel4:
      return multiply(xi, Tensor::letter(2, id.i), Tensor::letter(2, id.j)) -
             sum_over_k(2, d2_xi) * q;
  }
  throw std::logic_error("unknown generator family");
}

const Tensor& Ideal::generator(const GeneratorId& id) const {
  auto it = generators_.find(id);
  if (it == generators_.end()) throw std::out_of_range("no such generator: " + to_string(id));
  return it->second;
}

std::vector<std::pair<GeneratorId, Tensor>> Ideal::ideal_generators(Gen i, Gen j) const {
  std::vector<std::pair<GeneratorId, Tensor>> out;
  for (const auto& id : ids_)
    if (id.i == i && id.j == j) out.emplace_back(id, generator(id));
  return out;
}

// --- membership ------------------------------------------------------------

const char* status_name(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::Member:
      return "member";
    case MembershipStatus::NotMemberAtBound:
      return "not_member_at_bound";
    case MembershipStatus::BoundExceeded:
      return "bound_exceeded";
  }
  return "?";
}

Tensor expand(const Ideal& ideal, const Witness& witness) {
  Tensor total;
  for (const auto& t : witness.terms) {
    Tensor left = Tensor::monomial(t.left_dword, Poly::monomial(t.left_word));
    Tensor right = Tensor::monomial(t.right_dword, Poly::monomial(t.right_word));
    total += multiply(ideal.xi(), left, ideal.generator(t.generator), right) * t.coefficient;
  }
  return total;
}

std::vector<DWord> dwords_of_grade(std::size_t n, int grade) {
  std::vector<DWord> out;
  if (grade < 0) return out;
  DWord cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint8_t a : {std::uint8_t{1}, std::uint8_t{2}}) {
      if (a > remaining) continue;
      for (std::size_t i = 0; i < n; ++i) {
        cur.push_back(DLetter{a, static_cast<Gen>(i)});
        self(self, remaining - a);
        cur.pop_back();
      }
    }
  };
  rec(rec, grade);
  std::sort(out.begin(), out.end(), DWordLess{});
  return out;
}

Bounds resolve_bounds(const Ideal& ideal, const Tensor& e, Bounds requested) {
  if (requested.grade_bound < 0) requested.grade_bound = e.max_grade();
  if (requested.word_bound < 0)
    requested.word_bound =
        static_cast<int>(e.max_word_degree() + ideal.xi().max_entry_degree());
  return requested;
}

namespace {

struct CoordLess {
  bool operator()(const std::pair<DWord, Word>& a, const std::pair<DWord, Word>& b) const {
    if (DWordLess{}(a.first, b.first)) return true;
    if (DWordLess{}(b.first, a.first)) return false;
    return WordLess{}(a.second, b.second);
  }
};

class CoordIndex {
 public:
  std::uint32_t id(const DWord& w, const Word& x) {
    auto [it, inserted] = ids_.try_emplace({w, x}, static_cast<std::uint32_t>(ids_.size()));
    return it->second;
  }
  SparseVec vectorize(const Tensor& t) {
    SparseVec v;
    for (const auto& [w, c] : t.terms())
      for (const auto& [x, s] : c.terms()) v.emplace(id(w, x), s);
    return v;
  }

 private:
  std::map<std::pair<DWord, Word>, std::uint32_t, CoordLess> ids_;
};

struct SpanEntry {
  DWord left_dword;
  Word left_word;
  GeneratorId generator;
  DWord right_dword;
  Word right_word;
};

// Tries a single scaled generator before falling back to elimination.
std::optional<Witness> single_generator_match(const Ideal& ideal, const Tensor& e) {
  const auto& [ew, ec] = *e.terms().begin();
  for (const auto& id : ideal.all_ids()) {
    const Tensor& g = ideal.generator(id);
    if (g.terms().size() != e.terms().size()) continue;
    auto it = g.terms().find(ew);
    if (it == g.terms().end()) continue;
    const auto& [x, s] = *ec.terms().begin();
    Cyc gc = it->second.coefficient(x);
    if (gc.is_zero()) continue;
    Cyc factor = s / gc;
    if (g * factor == e) return Witness{{WitnessTerm{{}, {}, id, {}, {}, factor}}};
  }
  return std::nullopt;
}

struct ComponentResult {
  MembershipStatus status;
  Witness witness;
  std::size_t spanning_size = 0;
};

ComponentResult solve_component(const Ideal& ideal, const Tensor& part, int grade,
                                const Bounds& bounds) {
  const std::size_t n = ideal.rank();
  const XiHomomorphism& xi = ideal.xi();
  const FreeAlgebra& alg = xi.algebra();
  const auto word_bound = static_cast<std::size_t>(std::max(bounds.word_bound, 0));

  std::vector<std::vector<DWord>> dwords(static_cast<std::size_t>(grade) + 1);
  for (int g = 0; g <= grade; ++g) dwords[static_cast<std::size_t>(g)] = dwords_of_grade(n, g);
  std::vector<std::size_t> words_up_to_count(word_bound + 1);
  for (std::size_t l = 0, pw = 1, acc = 0; l <= word_bound; ++l, pw *= n) {
    acc += pw;
    words_up_to_count[l] = acc;
  }

  std::vector<const GeneratorId*> active;
  for (const auto& id : ideal.all_ids()) {
    const Tensor& g = ideal.generator(id);
    auto gg = g.homogeneous_grade();
    if (!g.is_zero() && gg && *gg <= grade) active.push_back(&id);
  }

  // Size check before any construction.
  std::size_t total = 0;
  for (const GeneratorId* id : active) {
    const int rest = grade - *ideal.generator(*id).homogeneous_grade();
    std::size_t frames = 0;
    for (int b = 0; b <= rest; ++b)
      frames += dwords[static_cast<std::size_t>(rest - b)].size() *
                dwords[static_cast<std::size_t>(b)].size();
    std::size_t word_pairs = 0;
    for (std::size_t l1 = 0, pw = 1; l1 <= word_bound; ++l1, pw *= n)
      word_pairs += pw * words_up_to_count[word_bound - l1];
    total += frames * word_pairs;
    if (total > bounds.size_cap) return {MembershipStatus::BoundExceeded, {}, total};
  }

  CoordIndex coords;
  const SparseVec target = coords.vectorize(part);
  EchelonBasis basis;
  std::vector<SpanEntry> entries;

  auto finish = [&](const Combination& combo) {
    ComponentResult r{MembershipStatus::Member, {}, total};
    for (const auto& [tag, c] : combo) {
      const SpanEntry& s = entries[tag];
      r.witness.terms.push_back(
          {s.left_dword, s.left_word, s.generator, s.right_dword, s.right_word, c});
    }
    return r;
  };

  for (const GeneratorId* id : active) {
    const Tensor& g = ideal.generator(*id);
    const int rest = grade - *g.homogeneous_grade();
    for (const Word& w1 : alg.words_up_to(word_bound)) {
      Tensor left_pushed = left_multiply(xi, Poly::monomial(w1), g);
      if (left_pushed.is_zero()) continue;
      for (int b = 0; b <= rest; ++b) {
        const auto& lefts = dwords[static_cast<std::size_t>(rest - b)];
        for (const DWord& d2 : dwords[static_cast<std::size_t>(b)]) {
          Tensor framed = multiply(xi, left_pushed, Tensor::monomial(d2, Poly::one()));
          for (const Word& w2 : alg.words_up_to(word_bound - w1.size())) {
            Tensor right_mult = framed * Poly::monomial(w2);
            if (right_mult.is_zero()) continue;
            for (const DWord& d1 : lefts) {
              SparseVec v;
              for (const auto& [w, c] : right_mult.terms()) {
                DWord full = concat(d1, w);
                for (const auto& [x, s] : c.terms()) v.emplace(coords.id(full, x), s);
              }
              const auto tag = static_cast<std::uint32_t>(entries.size());
              entries.push_back({d1, w1, *id, d2, w2});
              basis.insert(v, tag);
            }
          }
        }
      }
    }
    if (auto combo = basis.express(target)) return finish(*combo);
  }
  return {MembershipStatus::NotMemberAtBound, {}, total};
}

}  // namespace

MembershipVerdict membership(const Ideal& ideal, const Tensor& e, Bounds bounds) {
  MembershipVerdict verdict;
  verdict.bounds = resolve_bounds(ideal, e, bounds);
  if (e.is_zero()) {
    verdict.status = MembershipStatus::Member;
    verdict.witness = Witness{};
    return verdict;
  }
  if (e.max_grade() > verdict.bounds.grade_bound) {
    verdict.status = MembershipStatus::NotMemberAtBound;
    return verdict;
  }
  if (auto single = single_generator_match(ideal, e)) {
    verdict.status = MembershipStatus::Member;
    verdict.witness = std::move(single);
    return verdict;
  }
  Witness combined;
  for (const auto& [grade, part] : e.grade_components()) {
    ComponentResult r = solve_component(ideal, part, grade, verdict.bounds);
    verdict.spanning_size += r.spanning_size;
    if (r.status != MembershipStatus::Member) {
      verdict.status = r.status;
      return verdict;
    }
    combined.terms.insert(combined.terms.end(), r.witness.terms.begin(), r.witness.terms.end());
  }
  verdict.status = MembershipStatus::Member;
  verdict.witness = std::move(combined);
  return verdict;
}

}  // namespace qdga
