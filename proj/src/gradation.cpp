#include "filiform/gradation.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace filiform {

namespace {

GradationReport report_for(const WeightVector& w) {
  std::set<std::int64_t> levels;
  for (Index i = 0; i < w.size(); ++i) levels.insert(w(i));
  GradationReport r;
  r.nonempty_levels.assign(levels.begin(), levels.end());
  const std::int64_t lo = r.nonempty_levels.front();
  const std::int64_t hi = r.nonempty_levels.back();
  r.length = hi - lo + 1;
  r.connected = r.length == static_cast<std::int64_t>(r.nonempty_levels.size());
  return r;
}

bool lex_less(const WeightVector& a, const WeightVector& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

WeightVector sign_normalized(WeightVector w) {
  for (Index i = 0; i < w.size(); ++i) {
    if (w(i) == 0) continue;
    if (w(i) < 0) w = -w;
    break;
  }
  return w;
}

}  // namespace

GradationReport verify_weights(const Algebra& a, const WeightVector& w) {
  if (w.size() != a.dim()) {
    throw std::invalid_argument("verify_weights: weight count does not match the dimension");
  }
  for (const auto& [key, g] : a.constants()) {
    const auto [i, j, k] = key;
    if (w(i) + w(j) != w(k)) {
      std::ostringstream os;
      os << "weights are not admissible: g(" << i + 1 << "," << j + 1 << "," << k + 1
         << ") != 0 but w" << i + 1 << " + w" << j + 1 << " != w" << k + 1;
      throw gradation_error(os.str(), i, j, k);
    }
  }
  return report_for(w);
}

bool weights_admissible(const Algebra& a, const WeightVector& w) {
  if (w.size() != a.dim()) return false;
  for (const auto& [key, g] : a.constants()) {
    if (w(key[0]) + w(key[1]) != w(key[2])) return false;
  }
  return true;
}

std::vector<WeightVector> admissible_weight_lattice(const Algebra& a) {
  const Index n = a.dim();
  RatMatrix cons = RatMatrix::Zero(static_cast<Index>(a.constants().size()), n);
  Index row = 0;
  for (const auto& [key, g] : a.constants()) {
    cons(row, key[0]) += 1;
    cons(row, key[1]) += 1;
    cons(row, key[2]) -= 1;
    ++row;
  }
  const RatMatrix ker = kernel_basis(cons);
  std::vector<WeightVector> out;
  for (Index c = 0; c < ker.cols(); ++c) {
    // Scale to a primitive integer vector.
    mpz_class lcm = 1;
    for (Index i = 0; i < n; ++i) {
      const mpz_class den = ker(i, c).get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    mpz_class gcd = 0;
    std::vector<mpz_class> scaled(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
      mpq_class q = ker(i, c) * Rat(lcm);
      q.canonicalize();
      scaled[static_cast<std::size_t>(i)] = q.get_num();
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled[static_cast<std::size_t>(i)].get_mpz_t());
    }
    if (gcd == 0) gcd = 1;
    WeightVector w(n);
    for (Index i = 0; i < n; ++i) {
      mpz_class v = scaled[static_cast<std::size_t>(i)] / gcd;
      if (!v.fits_slong_p()) throw std::overflow_error("admissible_weight_lattice: weight overflow");
      w(i) = v.get_si();
    }
    out.push_back(sign_normalized(std::move(w)));
  }
  return out;
}

std::pair<WeightVector, GradationReport> best_diagonal_gradation(const Algebra& a, Index bound) {
  if (bound < 1) throw std::invalid_argument("best_diagonal_gradation: bound must be >= 1");
  const Index n = a.dim();
  const std::vector<WeightVector> lattice = admissible_weight_lattice(a);
  const std::size_t r = lattice.size();

  WeightVector best = WeightVector::Zero(n);
  GradationReport best_report = report_for(best);
  const auto consider = [&](const WeightVector& cand) {
    const WeightVector w = sign_normalized(cand);
    GradationReport rep = report_for(w);
    if (!rep.connected) return;
    if (rep.length > best_report.length ||
        (rep.length == best_report.length && lex_less(w, best))) {
      best = w;
      best_report = std::move(rep);
    }
  };

  if (r == 0) return {best, best_report};

  double box = 1.0;
  for (std::size_t t = 0; t < r; ++t) box *= static_cast<double>(2 * bound + 1);
  if (box > 4e6) {
    throw std::runtime_error(
        "best_diagonal_gradation: coefficient box too large to enumerate (lattice rank " +
        std::to_string(r) + ", bound " + std::to_string(bound) + ")");
  }

  // Suffix sums of the lattice basis reach spread-out staircase weights
  // (e.g. 1, 2, ..., n on a constraint-free table) at coefficient 1.
  std::vector<WeightVector> suffix(r, WeightVector::Zero(n));
  suffix[r - 1] = lattice[r - 1];
  for (std::size_t t = r - 1; t-- > 0;) suffix[t] = lattice[t] + suffix[t + 1];

  for (const auto& basis : {lattice, suffix}) {
    std::vector<std::int64_t> c(r, -bound);
    while (true) {
      WeightVector w = WeightVector::Zero(n);
      for (std::size_t t = 0; t < r; ++t) {
        if (c[t] != 0) w += c[t] * basis[t];
      }
      consider(w);
      std::size_t t = 0;
      while (t < r && c[t] == bound) c[t++] = -bound;
      if (t == r) break;
      ++c[t];
    }
  }
  return {best, best_report};
}

std::pair<Algebra, WeightVector> natural_grading(const Algebra& a) {
  if (!is_nilpotent(a)) {
    throw std::invalid_argument("natural_grading: the algebra is not nilpotent");
  }
  const Index n = a.dim();
  const auto series = lower_central_series(a);  // ends with the zero subspace
  const std::size_t levels = series.size() - 1;

  RatMatrix p(n, n);
  WeightVector w(n);
  Index col = 0;
  for (std::size_t lvl = 1; lvl <= levels; ++lvl) {
    const Subspace& li = series[lvl - 1];
    const Subspace& li_next = series[lvl];
    Index need = li.dim() - li_next.dim();
    // Extend a basis of L^{i+1} to L^i, preferring the earliest original
    // basis vectors, falling back to the echelon rows of L^i.
    RatMatrix span_rows(li_next.dim() + need, n);
    span_rows.topRows(li_next.dim()) = li_next.basis();
    Index taken = 0;
    Subspace cur = li_next;
    const auto try_candidate = [&](const RatVector& v) {
      if (need == 0) return;
      if (!li.contains(v) || cur.contains(v)) return;
      p.col(col) = v;
      w(col) = static_cast<std::int64_t>(lvl);
      ++col;
      span_rows.row(li_next.dim() + taken) = v.transpose();
      ++taken;
      cur = Subspace::span_rows(span_rows.topRows(li_next.dim() + taken));
      --need;
    };
    for (Index i = 0; i < n && need > 0; ++i) try_candidate(basis_vector(n, i));
    for (Index t = 0; t < li.dim() && need > 0; ++t) {
      try_candidate(RatVector(li.basis().row(t).transpose()));
    }
  }

  if (col != n) throw std::logic_error("natural_grading: adapted basis construction failed");

  const Algebra transformed = change_basis(a, p);
  Algebra graded(n);
  for (const auto& [key, g] : transformed.constants()) {
    if (w(key[0]) + w(key[1]) == w(key[2])) graded.set(key[0], key[1], key[2], g);
  }
  return {graded, w};
}

}  // namespace filiform
