#pragma once

#include "filiform/algebra.hpp"
#include "filiform/catalog.hpp"
#include "filiform/gradation.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace filiform {

/// Exact basis of a space of linear maps on an algebra, in deterministic
/// echelon order (unknowns ordered row-major over matrix entries).
struct DerivationBasis {
  Index algebra_dim = 0;
  std::vector<LinearMap> maps;
  Index dim() const { return static_cast<Index>(maps.size()); }
};

/// Nullspace of the derivation constraint system
///   sum_k g_ijk M(m,k) - sum_l (M(l,i) g_ljm + M(l,j) g_ilm) = 0
/// over the n^2 matrix entries, one equation per basis pair (i, j) and
/// output coordinate m. Requires a Leibniz table.
DerivationBasis derivation_space(const Algebra& a);

/// First basis pair (i, j) on which d([e_i,e_j]) != [d(e_i),e_j] + [e_i,d(e_j)],
/// or nullopt when d is a derivation.
std::optional<std::pair<Index, Index>> derivation_violation(const Algebra& a, const LinearMap& d);

bool is_derivation(const Algebra& a, const LinearMap& d);

/// Echelonized span of the right multiplications R_x(y) = [y, x] over the
/// basis; every right multiplication is a derivation of a Leibniz table.
DerivationBasis inner_derivations(const Algebra& a);

/// dim Der - dim Inn.
Index h1_dim(const Algebra& a);
/// n^2 - dim Der (rank of the coboundary map on 1-cochains, whose kernel
/// is the derivation space).
Index b2_dim(const Algebra& a);

/// Shift decomposition of the derivation space induced by a connected
/// diagonal gradation: W_s = {d in Der : d(V_j) <= V_{j+s}}.
struct GradedDerDecomposition {
  std::map<std::int64_t, std::vector<LinearMap>> levels;  // only nonzero W_s
  Index total_dim() const;
};

GradedDerDecomposition graded_der_decomposition(const Algebra& a, const WeightVector& w);

/// The explicit derivation bases known for the length-(n-1) families
/// M1(k), M2, M3, M4: the degree map d0, the chain shifts d_j, and the
/// corner maps h1 (and h2 when 2k-2 >= n for M1). For M2/M3 the weight of
/// d0 on the last basis vector is (n-1)/2, the unique value compatible
/// with the derivation identity; for M4 the diagonal map with weights
/// (1, 4-n, ..., 1, 2) replaces the off-diagonal variant that fails the
/// identity. k is ignored except for M1.
std::vector<LinearMap> expected_der_basis(Family family, Index n, Index k = -1);

}  // namespace filiform
