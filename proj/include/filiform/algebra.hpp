#pragma once

#include "filiform/linalg.hpp"
#include "filiform/rational.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace filiform {

/// One violated instance of the Leibniz identity on structure constants:
/// sum_l (g_jk^l g_il^m - g_ij^l g_lk^m + g_ik^l g_lj^m) = residual != 0.
/// Indices are 0-based.
struct DefectEntry {
  Index i, j, k, m;
  Rat residual;
};

/// Thrown when an operation requires the Leibniz identity and the input
/// table violates it; carries the full list of violated tuples.
class leibniz_error : public std::runtime_error {
 public:
  leibniz_error(const std::string& what, std::vector<DefectEntry> defects)
      : std::runtime_error(what), defects_(std::move(defects)) {}
  const std::vector<DefectEntry>& defects() const { return defects_; }

 private:
  std::vector<DefectEntry> defects_;
};

/// A finite-dimensional algebra presented by its structure constants
/// g_ijk: [e_i, e_j] = sum_k g_ijk e_k, with 0-based basis indices.
/// Only nonzero constants are stored; values are immutable in practice
/// (construct, then treat as a value).
class Algebra {
 public:
  using Key = std::array<Index, 3>;
  using ConstantMap = std::map<Key, Rat>;

  explicit Algebra(Index dim);

  Index dim() const { return dim_; }

  /// g_ijk, zero when absent.
  Rat coeff(Index i, Index j, Index k) const;
  /// Sets g_ijk; a zero value erases the entry.
  void set(Index i, Index j, Index k, Rat value);
  /// Accumulates into g_ijk, erasing on cancellation.
  void add(Index i, Index j, Index k, const Rat& value);

  /// Sorted by (i, j, k); deterministic iteration order.
  const ConstantMap& constants() const { return constants_; }

  /// Bilinear product of coordinate vectors.
  RatVector product(const RatVector& x, const RatVector& y) const;
  /// [e_i, e_j] as a coordinate vector.
  RatVector product_basis(Index i, Index j) const;

  /// Matrix of y -> [x, y].
  LinearMap left_mult(const RatVector& x) const;
  /// Matrix of y -> [y, x] (right multiplication).
  LinearMap right_mult(const RatVector& x) const;
  /// Matrix of y -> [e_i, y].
  LinearMap left_mult_basis(Index i) const;
  /// Matrix of y -> [y, e_i].
  LinearMap right_mult_basis(Index i) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

 private:
  void check_index(Index i) const;
  Index dim_;
  ConstantMap constants_;
};

RatVector basis_vector(Index dim, Index i);

/// All violated tuples of the Leibniz identity, in lexicographic
/// (i, j, k, m) order. Empty iff the table is a Leibniz algebra.
std::vector<DefectEntry> leibniz_defect(const Algebra& a);

bool is_leibniz(const Algebra& a);

/// Throws leibniz_error when leibniz_defect(a) is nonempty.
void require_leibniz(const Algebra& a, const std::string& operation);

/// True iff the table is antisymmetric (g_ijk = -g_jik). Requires a
/// Leibniz table; antisymmetry of an arbitrary table is not meaningful.
bool is_lie(const Algebra& a);

/// Structure constants of the same bilinear product in the basis whose
/// j-th vector is column j of p. Throws std::invalid_argument (reporting
/// the rank) when p is singular.
Algebra change_basis(const Algebra& a, const RatMatrix& p);

/// Lower central series L^1 = L, L^{k+1} = [L^k, L], listed down to the
/// first repetition (the repeated term is not included twice).
std::vector<Subspace> lower_central_series(const Algebra& a);

bool is_nilpotent(const Algebra& a);

/// dim L^i = n - i for 2 <= i <= n.
bool is_filiform(const Algebra& a);

/// {x : [L, x] = 0}.
Subspace right_annihilator(const Algebra& a);
/// {x : [x, L] = 0}.
Subspace left_annihilator(const Algebra& a);

}  // namespace filiform
