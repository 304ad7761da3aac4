#pragma once

#include "filiform/rational.hpp"

#include <optional>
#include <vector>

namespace filiform {

/// Reduced row echelon form with unit pivots. Pivoting is deterministic:
/// for each column, left to right, the first row with a nonzero entry is
/// chosen. Zero rows are dropped, so mat has pivots.size() rows.
struct Rref {
  RatMatrix mat;
  std::vector<Index> pivots;  // pivot column of each row, strictly increasing
};

Rref rref(RatMatrix m);

Index rank(const RatMatrix& m);

/// Basis of {x : m x = 0}; one column per free variable of the RREF,
/// ordered by ascending free-column index. A matrix with zero rows yields
/// the identity.
RatMatrix kernel_basis(const RatMatrix& m);

/// Exact inverse, or std::nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

bool matrices_equal(const RatMatrix& a, const RatMatrix& b);
bool is_zero(const RatMatrix& m);

/// A linear subspace of coordinate space, stored as a row-reduced basis
/// (reduced row echelon form, leftmost-pivot order). The representation
/// is canonical: two subspaces are equal iff their stored bases are equal.
class Subspace {
 public:
  /// The zero subspace of the given ambient dimension.
  explicit Subspace(Index ambient_dim);

  static Subspace full(Index ambient_dim);
  /// Span of the rows of m; ambient dimension m.cols().
  static Subspace span_rows(const RatMatrix& m);
  /// Span of the columns of m; ambient dimension m.rows().
  static Subspace span_cols(const RatMatrix& m);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  /// dim() x ambient_dim() matrix in reduced row echelon form.
  const RatMatrix& basis() const { return basis_; }

  bool contains(const RatVector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && matrices_equal(a.basis_, b.basis_);
  }

 private:
  Index ambient_ = 0;
  RatMatrix basis_;
  std::vector<Index> pivots_;
};

}  // namespace filiform
