#pragma once

#include "filiform/algebra.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace filiform {

/// One integer weight per basis index: encodes the diagonal Z-gradation
/// candidate V_m = span{e_i : w_i = m}.
using WeightVector = IntVector;

/// Shape of a diagonal gradation: which levels are nonempty, whether they
/// form a consecutive range, and the spread max - min + 1.
struct GradationReport {
  std::vector<std::int64_t> nonempty_levels;  // sorted ascending, distinct
  bool connected = false;
  std::int64_t length = 0;
};

/// Thrown by verify_weights: some nonzero g_ijk has w_i + w_j != w_k.
class gradation_error : public std::invalid_argument {
 public:
  gradation_error(const std::string& what, Index i, Index j, Index k)
      : std::invalid_argument(what), i(i), j(j), k(k) {}
  Index i, j, k;  // 0-based violating triple
};

/// Checks [V_i, V_j] <= V_{i+j} for the diagonal gradation given by w and
/// reports its shape. Throws gradation_error naming the first violating
/// triple (in (i, j, k) order) otherwise.
GradationReport verify_weights(const Algebra& a, const WeightVector& w);

bool weights_admissible(const Algebra& a, const WeightVector& w);

/// Primitive integer vectors spanning the rational solution space of
/// {w_i + w_j - w_k = 0 : g_ijk != 0}, in deterministic echelon order
/// (sign-normalized so the first nonzero entry is positive). The count is
/// the nullity of the constraint matrix; an empty list means only the
/// trivial gradation exists.
std::vector<WeightVector> admissible_weight_lattice(const Algebra& a);

/// Searches integer combinations of the lattice basis (and of its
/// suffix-sum companion basis, which reaches staircase weight patterns at
/// small bounds) with coefficients in [-bound, bound] for a connected
/// diagonal gradation of maximal length. Ties prefer the candidate that
/// is lexicographically smallest after sign normalization. Falls back to
/// the all-zero vector (length 1). Throws std::runtime_error when the
/// coefficient box is too large to enumerate.
std::pair<WeightVector, GradationReport> best_diagonal_gradation(const Algebra& a, Index bound);

/// The associated graded algebra of the lower central series, in an
/// adapted basis that prefers the earliest original basis vectors, with
/// the level of each adapted vector as its weight (levels start at 1).
/// Requires a nilpotent input.
std::pair<Algebra, WeightVector> natural_grading(const Algebra& a);

}  // namespace filiform
