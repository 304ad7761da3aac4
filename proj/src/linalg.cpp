#include "filiform/linalg.hpp"

#include <stdexcept>

namespace filiform {

namespace {

// Subtracts f * row r from row i, touching only columns >= from where
// row r is nonzero. Entries of these exact matrices are mostly zero, so
// the skip matters on the larger elimination problems.
void axpy_row(RatMatrix& m, Index i, Index r, const Rat& f, Index from) {
  const Index cols = m.cols();
  for (Index c = from; c < cols; ++c) {
    if (sgn(m(r, c)) != 0) m(i, c) -= f * m(r, c);
  }
}

}  // namespace

Rref rref(RatMatrix m) {
  const Index nrows = m.rows();
  const Index ncols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < ncols && r < nrows; ++c) {
    Index p = -1;
    for (Index i = r; i < nrows; ++i) {
      if (sgn(m(i, c)) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    if (m(r, c) != 1) {
      const Rat inv = Rat(1) / m(r, c);
      m(r, c) = 1;
      for (Index cc = c + 1; cc < ncols; ++cc) {
        if (sgn(m(r, cc)) != 0) m(r, cc) *= inv;
      }
    }
    for (Index i = r + 1; i < nrows; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rat f = m(i, c);
      m(i, c) = 0;
      axpy_row(m, i, r, f, c + 1);
    }
    pivots.push_back(c);
    ++r;
  }
  // Back-substitution: clear entries above each pivot.
  for (Index t = static_cast<Index>(pivots.size()) - 1; t >= 0; --t) {
    const Index c = pivots[static_cast<std::size_t>(t)];
    for (Index i = 0; i < t; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      const Rat f = m(i, c);
      m(i, c) = 0;
      axpy_row(m, i, t, f, c + 1);
    }
  }
  Rref out;
  out.mat = m.topRows(static_cast<Index>(pivots.size()));
  out.pivots = std::move(pivots);
  return out;
}

Index rank(const RatMatrix& m) { return static_cast<Index>(rref(m).pivots.size()); }

RatMatrix kernel_basis(const RatMatrix& m) {
  const Index n = m.cols();
  const Rref r = rref(m);
  std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
  for (Index c : r.pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<Index> free_cols;
  for (Index c = 0; c < n; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }
  RatMatrix basis = RatMatrix::Zero(n, static_cast<Index>(free_cols.size()));
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const Index f = free_cols[t];
    basis(f, static_cast<Index>(t)) = 1;
    for (std::size_t s = 0; s < r.pivots.size(); ++s) {
      basis(r.pivots[s], static_cast<Index>(t)) = -r.mat(static_cast<Index>(s), f);
    }
  }
  return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("inverse: matrix is not square");
  }
  const Index n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = RatMatrix::Identity(n, n);
  const Rref r = rref(std::move(aug));
  if (static_cast<Index>(r.pivots.size()) != n) return std::nullopt;
  for (Index i = 0; i < n; ++i) {
    if (r.pivots[static_cast<std::size_t>(i)] != i) return std::nullopt;
  }
  return RatMatrix(r.mat.rightCols(n));
}

bool matrices_equal(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

bool is_zero(const RatMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) != 0) return false;
    }
  }
  return true;
}

Subspace::Subspace(Index ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {
  if (ambient_dim < 0) throw std::invalid_argument("Subspace: negative ambient dimension");
}

Subspace Subspace::full(Index ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = RatMatrix::Identity(ambient_dim, ambient_dim);
  s.pivots_.resize(static_cast<std::size_t>(ambient_dim));
  for (Index i = 0; i < ambient_dim; ++i) s.pivots_[static_cast<std::size_t>(i)] = i;
  return s;
}

Subspace Subspace::span_rows(const RatMatrix& m) {
  Subspace s(m.cols());
  Rref r = rref(m);
  s.basis_ = std::move(r.mat);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::span_cols(const RatMatrix& m) { return span_rows(m.transpose()); }

bool Subspace::contains(const RatVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
  RatVector w = v;
  for (Index t = 0; t < basis_.rows(); ++t) {
    const Index p = pivots_[static_cast<std::size_t>(t)];
    if (sgn(w(p)) == 0) continue;
    const Rat f = w(p);
    w(p) = 0;
    for (Index c = p + 1; c < ambient_; ++c) {
      if (sgn(basis_(t, c)) != 0) w(c) -= f * basis_(t, c);
    }
  }
  for (Index c = 0; c < ambient_; ++c) {
    if (sgn(w(c)) != 0) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw std::invalid_argument("Subspace::contains: ambient dimension mismatch");
  }
  for (Index t = 0; t < other.basis_.rows(); ++t) {
    if (!contains(RatVector(other.basis_.row(t).transpose()))) return false;
  }
  return true;
}

}  // namespace filiform
