#include "qdga/linsolve.hpp"

namespace qdga {

void axpy(SparseVec& y, const Cyc& a, const SparseVec& x) {
  if (a.is_zero()) return;
  auto hint = y.begin();
  for (const auto& [key, value] : x) {
    hint = y.lower_bound(key);
    if (hint != y.end() && hint->first == key) {
      hint->second += a * value;
      if (hint->second.is_zero()) hint = y.erase(hint);
    } else {
      hint = y.emplace_hint(hint, key, a * value);
    }
  }
}

void EchelonBasis::eliminate(SparseVec& v, Combination& combo, const Cyc& combo_sign) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::uint32_t key = it->first;
    const Cyc factor = it->second;
    // The row's entries all sit at or after its pivot, so earlier
    // positions of v are untouched and the pivot entry cancels.
    axpy(v, -factor, row->second.entries);
    axpy(combo, combo_sign * factor, row->second.combo);
    it = v.upper_bound(key);
  }
}

bool EchelonBasis::insert(const SparseVec& v, std::uint32_t tag) {
  SparseVec rest = v;
  Combination combo{{tag, Cyc(1)}};
  eliminate(rest, combo, Cyc(-1));
  if (rest.empty()) return false;
  const Cyc scale = rest.begin()->second.inverse();
  for (auto& [k, x] : rest) x *= scale;
  for (auto& [k, x] : combo) x *= scale;
  const std::uint32_t pivot = rest.begin()->first;
  rows_.emplace(pivot, Row{std::move(rest), std::move(combo)});
  return true;
}

std::optional<Combination> EchelonBasis::express(const SparseVec& target) const {
  SparseVec rest = target;
  Combination combo;
  eliminate(rest, combo, Cyc(1));
  if (!rest.empty()) return std::nullopt;
  return combo;
}

}  // namespace qdga
