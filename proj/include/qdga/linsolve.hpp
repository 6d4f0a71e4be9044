#pragma once

#include "qdga/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>

namespace qdga {

/// Sparse vector over Q(q) keyed by coordinate id.
using SparseVec = std::map<std::uint32_t, Cyc>;
/// Linear combination of inserted vectors, keyed by caller-supplied tag.
using Combination = std::map<std::uint32_t, Cyc>;

/// Incremental semi-echelon basis over Q(q). Each stored row has leading
/// coefficient 1 at its pivot and no entries below it; every row remembers how
/// it was assembled from the inserted vectors, so a successful `express`
/// yields an explicit certificate.
class EchelonBasis {
 public:
  /// Returns true if v was independent of the rows so far.
  bool insert(const SparseVec& v, std::uint32_t tag);

  /// Writes target as a combination of inserted vectors if it lies in their span.
  std::optional<Combination> express(const SparseVec& target) const;

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    SparseVec entries;
    Combination combo;
  };

  // Eliminates every pivot position of v; combo tracks what was subtracted.
  void eliminate(SparseVec& v, Combination& combo, const Cyc& combo_sign) const;

  std::unordered_map<std::uint32_t, Row> rows_;
};

void axpy(SparseVec& y, const Cyc& a, const SparseVec& x);

}  // namespace qdga
