#include "filiform/derivation.hpp"

#include <stdexcept>

namespace filiform {

namespace {

LinearMap reshape_to_map(const RatVector& v, Index n) {
  LinearMap m(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) m(r, c) = v(r * n + c);
  }
  return m;
}

RatVector flatten(const LinearMap& m) {
  const Index n = m.rows();
  RatVector v(n * n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) v(r * n + c) = m(r, c);
  }
  return v;
}

// Matrix of the coboundary map on 1-cochains, f -> ((x, y) ->
// [f(x), y] + [x, f(y)] - f([x, y])): one row per basis pair and output
// coordinate, one column per matrix entry (row-major). Its kernel is the
// derivation space, its rank the 2-coboundary dimension.
RatMatrix derivation_constraints(const Algebra& a) {
  const Index n = a.dim();
  // Sparse accumulation of the constraint rows, keyed by (i, j, m) so the
  // row order is deterministic.
  std::map<std::array<Index, 3>, std::map<Index, Rat>> rows;
  const auto entry = [&](Index i, Index j, Index m, Index unknown) -> Rat& {
    return rows[{i, j, m}][unknown];
  };
  for (const auto& [key, g] : a.constants()) {
    const auto [i, j, k] = key;
    // d([e_i, e_j]) contributes g_ijk M(m, k) to every output coordinate m.
    for (Index m = 0; m < n; ++m) entry(i, j, m, m * n + k) += g;
    // [d(e_i), e_j]: g = g_ljm seen as (l, j, m); unknown M(l, i).
    {
      const Index l = key[0], jj = key[1], m = key[2];
      for (Index i2 = 0; i2 < n; ++i2) entry(i2, jj, m, l * n + i2) -= g;
    }
    // [e_i, d(e_j)]: g = g_ilm seen as (i, l, m); unknown M(l, j).
    {
      const Index ii = key[0], l = key[1], m = key[2];
      for (Index j2 = 0; j2 < n; ++j2) entry(ii, j2, m, l * n + j2) -= g;
    }
  }

  std::vector<const std::map<Index, Rat>*> live;
  for (const auto& [pos, row] : rows) {
    for (const auto& [unknown, v] : row) {
      if (sgn(v) != 0) {
        live.push_back(&row);
        break;
      }
    }
  }
  RatMatrix cons = RatMatrix::Zero(static_cast<Index>(live.size()), n * n);
  for (std::size_t t = 0; t < live.size(); ++t) {
    for (const auto& [unknown, v] : *live[t]) cons(static_cast<Index>(t), unknown) = v;
  }
  return cons;
}

}  // namespace

DerivationBasis derivation_space(const Algebra& a) {
  require_leibniz(a, "derivation_space");
  const Index n = a.dim();
  const RatMatrix ker = kernel_basis(derivation_constraints(a));
  DerivationBasis basis;
  basis.algebra_dim = n;
  basis.maps.reserve(static_cast<std::size_t>(ker.cols()));
  for (Index c = 0; c < ker.cols(); ++c) {
    basis.maps.push_back(reshape_to_map(ker.col(c), n));
  }
  return basis;
}

std::optional<std::pair<Index, Index>> derivation_violation(const Algebra& a, const LinearMap& d) {
  const Index n = a.dim();
  if (d.rows() != n || d.cols() != n) {
    throw std::invalid_argument("derivation_violation: map does not match the algebra dimension");
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const RatVector lhs = d * a.product_basis(i, j);
      const RatVector rhs =
          a.product(RatVector(d.col(i)), basis_vector(n, j)) +
          a.product(basis_vector(n, i), RatVector(d.col(j)));
      for (Index m = 0; m < n; ++m) {
        if (lhs(m) != rhs(m)) return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

bool is_derivation(const Algebra& a, const LinearMap& d) {
  return !derivation_violation(a, d).has_value();
}

DerivationBasis inner_derivations(const Algebra& a) {
  require_leibniz(a, "inner_derivations");
  const Index n = a.dim();
  RatMatrix stacked(n, n * n);
  for (Index i = 0; i < n; ++i) {
    stacked.row(i) = flatten(a.right_mult_basis(i)).transpose();
  }
  const Rref r = rref(std::move(stacked));
  DerivationBasis basis;
  basis.algebra_dim = n;
  for (Index t = 0; t < r.mat.rows(); ++t) {
    basis.maps.push_back(reshape_to_map(r.mat.row(t).transpose(), n));
  }
  return basis;
}

Index h1_dim(const Algebra& a) {
  return derivation_space(a).dim() - inner_derivations(a).dim();
}

Index b2_dim(const Algebra& a) {
  require_leibniz(a, "b2_dim");
  return rank(derivation_constraints(a));
}

Index GradedDerDecomposition::total_dim() const {
  Index d = 0;
  for (const auto& [shift, maps] : levels) d += static_cast<Index>(maps.size());
  return d;
}

GradedDerDecomposition graded_der_decomposition(const Algebra& a, const WeightVector& w) {
  const GradationReport report = verify_weights(a, w);
  if (!report.connected) {
    throw std::invalid_argument("graded_der_decomposition: the gradation is not connected");
  }
  const Index n = a.dim();
  const DerivationBasis der = derivation_space(a);

  GradedDerDecomposition out;
  if (der.dim() == 0) return out;
  for (std::int64_t s = -(report.length - 1); s <= report.length - 1; ++s) {
    // Solve for combinations of the Der basis supported on entries with
    // w_r - w_c = s.
    std::vector<Index> forbidden;
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c) {
        if (w(r) - w(c) != s) forbidden.push_back(r * n + c);
      }
    }
    RatMatrix cons = RatMatrix::Zero(static_cast<Index>(forbidden.size()), der.dim());
    for (std::size_t t = 0; t < forbidden.size(); ++t) {
      const Index pos = forbidden[t];
      const Index r = pos / n, c = pos % n;
      for (Index b = 0; b < der.dim(); ++b) {
        cons(static_cast<Index>(t), b) = der.maps[static_cast<std::size_t>(b)](r, c);
      }
    }
    const RatMatrix ker = kernel_basis(cons);
    if (ker.cols() == 0) continue;
    std::vector<LinearMap> maps;
    for (Index c = 0; c < ker.cols(); ++c) {
      LinearMap m = RatMatrix::Zero(n, n);
      for (Index b = 0; b < der.dim(); ++b) {
        if (sgn(ker(b, c)) != 0) m += ker(b, c) * der.maps[static_cast<std::size_t>(b)];
      }
      maps.push_back(std::move(m));
    }
    out.levels.emplace(s, std::move(maps));
  }
  return out;
}

std::vector<LinearMap> expected_der_basis(Family family, Index n, Index k) {
  std::vector<LinearMap> maps;
  const auto zero = [&]() { return RatMatrix::Zero(n, n); };

  switch (family) {
    case Family::M1: {
      if (n < 4 || k < 3 || k > n - 1) {
        throw std::invalid_argument("expected_der_basis: M1 requires n >= 4 and 3 <= k <= n-1");
      }
      // d0 = degree map: y_i -> i y_i, y_n -> (k-1) y_n.
      LinearMap d0 = zero();
      for (Index c = 0; c < n - 1; ++c) d0(c, c) = c + 1;
      d0(n - 1, n - 1) = k - 1;
      maps.push_back(std::move(d0));
      // d_j = chain shift by j on y_1..y_{n-j-1}.
      for (Index j = 1; j <= n - 2; ++j) {
        LinearMap dj = zero();
        for (Index c = 0; c + j <= n - 2; ++c) dj(c + j, c) = 1;
        maps.push_back(std::move(dj));
      }
      // h1: y_n -> y_{n-1}.
      LinearMap h1 = zero();
      h1(n - 2, n - 1) = 1;
      maps.push_back(std::move(h1));
      if (2 * k - 2 >= n) {
        // h2: y_1 -> y_n, y_i -> (i-1) y_{k+i-2} for 2 <= i <= n-k+1.
        LinearMap h2 = zero();
        h2(n - 1, 0) = 1;
        for (Index i = 2; i <= n - k + 1; ++i) h2(k + i - 3, i - 1) = i - 1;
        maps.push_back(std::move(h2));
      }
      break;
    }
    case Family::M2:
    case Family::M3: {
      if (n < 5 || n % 2 == 0) {
        throw std::invalid_argument("expected_der_basis: M2/M3 require odd n >= 5");
      }
      LinearMap d0 = zero();
      for (Index c = 0; c < n - 1; ++c) d0(c, c) = c + 1;
      d0(n - 1, n - 1) = Rat(n - 1) / 2;  // forced by [y_n, y_n] = a y_{n-1}
      maps.push_back(std::move(d0));
      for (Index j = 1; j <= n - 2; ++j) {
        LinearMap dj = zero();
        for (Index c = 0; c + j <= n - 2; ++c) dj(c + j, c) = 1;
        maps.push_back(std::move(dj));
      }
      LinearMap h1 = zero();
      h1(n - 2, n - 1) = 1;
      maps.push_back(std::move(h1));
      break;
    }
    case Family::M4: {
      if (n < 4) throw std::invalid_argument("expected_der_basis: M4 requires n >= 4");
      // d_s for s = 3-n..0: y_1 -> y_{n-1+s}.
      for (Index s = 3 - n; s <= 0; ++s) {
        LinearMap ds = zero();
        ds(n - 2 + s, 0) = 1;
        maps.push_back(std::move(ds));
      }
      // d_j for j = 1..n-2: y_i -> y_{i+j} for 2 <= i <= n-j.
      for (Index j = 1; j <= n - 2; ++j) {
        LinearMap dj = zero();
        for (Index i = 2; i <= n - j; ++i) dj(i + j - 1, i - 1) = 1;
        maps.push_back(std::move(dj));
      }
      // h1: y_1 -> y_n.
      LinearMap h1 = zero();
      h1(n - 1, 0) = 1;
      maps.push_back(std::move(h1));
      // Diagonal weight map: 1 on y_1, i+2-n on y_i, 2 on y_n.
      LinearMap h0 = zero();
      h0(0, 0) = 1;
      for (Index c = 1; c <= n - 2; ++c) h0(c, c) = c + 3 - n;
      h0(n - 1, n - 1) = 2;
      maps.push_back(std::move(h0));
      break;
    }
    default:
      throw std::invalid_argument("expected_der_basis: only M1, M2, M3, M4 have tabulated bases");
  }
  return maps;
}

}  // namespace filiform
