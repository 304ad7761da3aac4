#include "filiform/algebra.hpp"

#include <sstream>

namespace filiform {

namespace {

std::string dims_message(const std::string& what, Index expected, Index got) {
  std::ostringstream os;
  os << what << ": expected dimension " << expected << ", got " << got;
  return os.str();
}

}  // namespace

Algebra::Algebra(Index dim) : dim_(dim) {
  if (dim <= 0) throw std::invalid_argument("Algebra: dimension must be positive");
}

void Algebra::check_index(Index i) const {
  if (i < 0 || i >= dim_) {
    std::ostringstream os;
    os << "Algebra: index " << i << " out of range [0, " << dim_ - 1 << "]";
    throw std::invalid_argument(os.str());
  }
}

Rat Algebra::coeff(Index i, Index j, Index k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  const auto it = constants_.find(Key{i, j, k});
  return it == constants_.end() ? Rat(0) : it->second;
}

void Algebra::set(Index i, Index j, Index k, Rat value) {
  check_index(i);
  check_index(j);
  check_index(k);
  value.canonicalize();  // keep the stored scalars in lowest terms
  if (sgn(value) == 0) {
    constants_.erase(Key{i, j, k});
  } else {
    constants_[Key{i, j, k}] = std::move(value);
  }
}

void Algebra::add(Index i, Index j, Index k, const Rat& value) {
  if (sgn(value) == 0) return;
  check_index(i);
  check_index(j);
  check_index(k);
  Rat v = value;
  v.canonicalize();
  const Key key{i, j, k};
  auto it = constants_.find(key);
  if (it == constants_.end()) {
    constants_.emplace(key, std::move(v));
    return;
  }
  it->second += v;
  if (sgn(it->second) == 0) constants_.erase(it);
}

RatVector Algebra::product(const RatVector& x, const RatVector& y) const {
  if (x.size() != dim_) throw std::invalid_argument(dims_message("product: left factor", dim_, x.size()));
  if (y.size() != dim_) throw std::invalid_argument(dims_message("product: right factor", dim_, y.size()));
  RatVector out = RatVector::Zero(dim_);
  for (const auto& [key, g] : constants_) {
    const auto [i, j, k] = key;
    if (sgn(x(i)) == 0 || sgn(y(j)) == 0) continue;
    out(k) += g * x(i) * y(j);
  }
  return out;
}

RatVector Algebra::product_basis(Index i, Index j) const {
  check_index(i);
  check_index(j);
  RatVector out = RatVector::Zero(dim_);
  const auto lo = constants_.lower_bound(Key{i, j, 0});
  const auto hi = constants_.upper_bound(Key{i, j, dim_});
  for (auto it = lo; it != hi; ++it) out(it->first[2]) = it->second;
  return out;
}

LinearMap Algebra::left_mult_basis(Index i) const {
  check_index(i);
  LinearMap m = RatMatrix::Zero(dim_, dim_);
  const auto lo = constants_.lower_bound(Key{i, 0, 0});
  const auto hi = constants_.upper_bound(Key{i, dim_, dim_});
  for (auto it = lo; it != hi; ++it) m(it->first[2], it->first[1]) = it->second;
  return m;
}

LinearMap Algebra::right_mult_basis(Index i) const {
  check_index(i);
  LinearMap m = RatMatrix::Zero(dim_, dim_);
  for (const auto& [key, g] : constants_) {
    if (key[1] != i) continue;
    m(key[2], key[0]) = g;
  }
  return m;
}

LinearMap Algebra::left_mult(const RatVector& x) const {
  if (x.size() != dim_) throw std::invalid_argument(dims_message("left_mult", dim_, x.size()));
  LinearMap m = RatMatrix::Zero(dim_, dim_);
  for (const auto& [key, g] : constants_) {
    const auto [i, j, k] = key;
    if (sgn(x(i)) != 0) m(k, j) += g * x(i);
  }
  return m;
}

LinearMap Algebra::right_mult(const RatVector& x) const {
  if (x.size() != dim_) throw std::invalid_argument(dims_message("right_mult", dim_, x.size()));
  LinearMap m = RatMatrix::Zero(dim_, dim_);
  for (const auto& [key, g] : constants_) {
    const auto [i, j, k] = key;
    if (sgn(x(j)) != 0) m(k, i) += g * x(j);
  }
  return m;
}

RatVector basis_vector(Index dim, Index i) {
  if (i < 0 || i >= dim) throw std::invalid_argument("basis_vector: index out of range");
  RatVector v = RatVector::Zero(dim);
  v(i) = 1;
  return v;
}

std::vector<DefectEntry> leibniz_defect(const Algebra& a) {
  const Index n = a.dim();
  // Cache of all pair products [e_i, e_j].
  std::vector<RatVector> pair(static_cast<std::size_t>(n * n));
  std::vector<char> nonzero(static_cast<std::size_t>(n * n), 0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      pair[static_cast<std::size_t>(i * n + j)] = a.product_basis(i, j);
    }
  }
  for (const auto& [key, g] : a.constants()) {
    nonzero[static_cast<std::size_t>(key[0] * n + key[1])] = 1;
  }

  const auto at = [&](Index i, Index j) -> const RatVector& {
    return pair[static_cast<std::size_t>(i * n + j)];
  };

  std::vector<DefectEntry> out;
  RatVector w(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        const bool any = nonzero[static_cast<std::size_t>(j * n + k)] ||
                         nonzero[static_cast<std::size_t>(i * n + j)] ||
                         nonzero[static_cast<std::size_t>(i * n + k)];
        if (!any) continue;
        w.setZero();
        // [e_i, [e_j, e_k]]
        const RatVector& jk = at(j, k);
        for (Index l = 0; l < n; ++l) {
          if (sgn(jk(l)) != 0) w += jk(l) * at(i, l);
        }
        // - [[e_i, e_j], e_k]
        const RatVector& ij = at(i, j);
        for (Index l = 0; l < n; ++l) {
          if (sgn(ij(l)) != 0) w -= ij(l) * at(l, k);
        }
        // + [[e_i, e_k], e_j]
        const RatVector& ik = at(i, k);
        for (Index l = 0; l < n; ++l) {
          if (sgn(ik(l)) != 0) w += ik(l) * at(l, j);
        }
        for (Index m = 0; m < n; ++m) {
          if (sgn(w(m)) != 0) out.push_back(DefectEntry{i, j, k, m, w(m)});
        }
      }
    }
  }
  return out;
}

bool is_leibniz(const Algebra& a) { return leibniz_defect(a).empty(); }

void require_leibniz(const Algebra& a, const std::string& operation) {
  auto defects = leibniz_defect(a);
  if (defects.empty()) return;
  std::ostringstream os;
  os << operation << ": input violates the Leibniz identity (" << defects.size()
     << " tuple" << (defects.size() == 1 ? "" : "s") << ")";
  throw leibniz_error(os.str(), std::move(defects));
}

bool is_lie(const Algebra& a) {
  require_leibniz(a, "is_lie");
  for (const auto& [key, g] : a.constants()) {
    if (a.coeff(key[1], key[0], key[2]) != -g) return false;
  }
  return true;
}

Algebra change_basis(const Algebra& a, const RatMatrix& p) {
  const Index n = a.dim();
  if (p.rows() != n || p.cols() != n) {
    throw std::invalid_argument("change_basis: matrix does not match the algebra dimension");
  }
  const auto pinv = inverse(p);
  if (!pinv) {
    std::ostringstream os;
    os << "change_basis: singular basis change (rank " << rank(p) << " < " << n << ")";
    throw std::invalid_argument(os.str());
  }
  Algebra out(n);
  for (Index j1 = 0; j1 < n; ++j1) {
    for (Index j2 = 0; j2 < n; ++j2) {
      const RatVector w = a.product(RatVector(p.col(j1)), RatVector(p.col(j2)));
      const RatVector c = (*pinv) * w;
      for (Index k = 0; k < n; ++k) {
        if (sgn(c(k)) != 0) out.set(j1, j2, k, c(k));
      }
    }
  }
  return out;
}

std::vector<Subspace> lower_central_series(const Algebra& a) {
  const Index n = a.dim();
  std::vector<Subspace> series;
  series.push_back(Subspace::full(n));
  while (true) {
    const Subspace& cur = series.back();
    RatMatrix prods(cur.dim() * n, n);
    Index row = 0;
    for (Index t = 0; t < cur.dim(); ++t) {
      const RatVector u = cur.basis().row(t).transpose();
      for (Index j = 0; j < n; ++j) {
        prods.row(row++) = a.product(u, basis_vector(n, j)).transpose();
      }
    }
    Subspace next = Subspace::span_rows(prods);
    if (next == cur) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const Algebra& a) {
  require_leibniz(a, "is_nilpotent");
  return lower_central_series(a).back().dim() == 0;
}

bool is_filiform(const Algebra& a) {
  require_leibniz(a, "is_filiform");
  const auto series = lower_central_series(a);
  const Index n = a.dim();
  if (series.back().dim() != 0) return false;
  if (static_cast<Index>(series.size()) != n) return false;
  for (std::size_t t = 1; t < series.size(); ++t) {
    if (series[t].dim() != n - static_cast<Index>(t) - 1) return false;
  }
  return true;
}

Subspace right_annihilator(const Algebra& a) {
  const Index n = a.dim();
  RatMatrix stacked(n * n, n);
  for (Index i = 0; i < n; ++i) {
    stacked.middleRows(i * n, n) = a.left_mult_basis(i);
  }
  return Subspace::span_cols(kernel_basis(stacked));
}

Subspace left_annihilator(const Algebra& a) {
  const Index n = a.dim();
  RatMatrix stacked(n * n, n);
  for (Index j = 0; j < n; ++j) {
    stacked.middleRows(j * n, n) = a.right_mult_basis(j);
  }
  return Subspace::span_cols(kernel_basis(stacked));
}

}  // namespace filiform
