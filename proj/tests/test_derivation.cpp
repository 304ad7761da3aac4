#include "filiform/derivation.hpp"

#include "filiform/catalog.hpp"

#include <doctest.h>

#include "test_util.hpp"

#include <random>

using namespace filiform;
using namespace filiform::testutil;

namespace {

RatVector vec(const LinearMap& m) {
  const Index n = m.rows();
  RatVector v(n * n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) v(r * n + c) = m(r, c);
  }
  return v;
}

Subspace span_of(const std::vector<LinearMap>& maps, Index n) {
  RatMatrix rows(static_cast<Index>(maps.size()), n * n);
  for (std::size_t t = 0; t < maps.size(); ++t) rows.row(static_cast<Index>(t)) = vec(maps[t]).transpose();
  return Subspace::span_rows(rows);
}

LinearMap m4_printed_h0(Index n) {
  // the off-diagonal variant: y_1 -> y_n, y_i -> (2-n+i) y_i for i >= 2
  LinearMap h0 = RatMatrix::Zero(n, n);
  h0(n - 1, 0) = 1;
  for (Index c = 1; c <= n - 1; ++c) h0(c, c) = c + 3 - n;
  return h0;
}

}  // namespace

TEST_CASE("derivations of the abelian algebra are all linear maps") {
  for (Index n : {2, 3, 4}) {
    const DerivationBasis der = derivation_space(abelian(n));
    CHECK(der.dim() == n * n);
    CHECK(inner_derivations(abelian(n)).dim() == 0);
    CHECK(h1_dim(abelian(n)) == n * n);
    CHECK(b2_dim(abelian(n)) == 0);
  }
}

TEST_CASE("derivation_space requires a Leibniz table") {
  Algebra bad = make_ngf1(5);
  bad.set(1, 1, 2, Rat(1));
  CHECK_THROWS_AS(derivation_space(bad), leibniz_error);
  CHECK_THROWS_AS(inner_derivations(bad), leibniz_error);
  CHECK_THROWS_AS(h1_dim(bad), leibniz_error);
}

TEST_CASE("oracle soundness: basis maps are derivations, count = nullity") {
  std::mt19937_64 rng(3);
  for (const Algebra& a : {make_m1(6, 3), make_m1(6, 5), make_m2(7, Rat(2)), make_m4(6),
                           make_ngf2(6), make_ngf3(6, 1),
                           change_basis(make_m4(5), random_invertible(rng, 5))}) {
    const DerivationBasis der = derivation_space(a);
    for (const LinearMap& d : der.maps) CHECK(is_derivation(a, d));
    // the basis is linearly independent by construction; verify anyway
    CHECK(span_of(der.maps, a.dim()).dim() == der.dim());
  }
}

TEST_CASE("tabulated maps of M1(6,3) lie in the computed space") {
  const Algebra a = make_m1(6, 3);
  const DerivationBasis der = derivation_space(a);
  const Subspace span = span_of(der.maps, 6);
  const auto expected = expected_der_basis(Family::M1, 6, 3);
  CHECK(expected.size() == 6);  // d0, d1..d4, h1 in the 2k-2 <= n-1 case
  for (const LinearMap& m : expected) {
    CHECK(is_derivation(a, m));
    CHECK(span.contains(vec(m)));
  }
}

TEST_CASE("is_derivation: corner maps and violation reporting") {
  // h1 on M1(n, k)
  for (Index n : {5, 7}) {
    const Algebra a = make_m1(n, 3);
    LinearMap h1 = RatMatrix::Zero(n, n);
    h1(n - 2, n - 1) = 1;
    CHECK(is_derivation(a, h1));
    CHECK(is_derivation(a, LinearMap(RatMatrix::Zero(n, n))));
  }
  // the off-diagonal h0 variant on M4 fails exactly at (y_1, y_1)
  for (Index n : {5, 6, 8}) {
    const Algebra m4 = make_m4(n);
    const auto violation = derivation_violation(m4, m4_printed_h0(n));
    REQUIRE(violation.has_value());
    CHECK(violation->first == 0);
    CHECK(violation->second == 0);
  }
  const Algebra a = make_m1(5, 3);
  CHECK_THROWS_AS(is_derivation(a, LinearMap(RatMatrix::Zero(4, 4))), std::invalid_argument);
}

TEST_CASE("inner derivations: dimensions and annihilator complement") {
  CHECK(inner_derivations(make_m1(6, 3)).dim() == 2);
  CHECK(inner_derivations(make_m1(8, 7)).dim() == 2);
  for (Index n = 4; n <= 7; ++n) {
    CHECK(inner_derivations(make_m4(n)).dim() == n - 1);
  }
  // dim Inn = n - dim R(L) where R is the right annihilator
  std::mt19937_64 rng(17);
  for (const Algebra& a : {make_m1(6, 4), make_m2(7, Rat(1)), make_m3(7), make_ngf2(6),
                           change_basis(make_ngf1(5), random_invertible(rng, 5))}) {
    CHECK(inner_derivations(a).dim() == a.dim() - right_annihilator(a).dim());
    for (const LinearMap& m : inner_derivations(a).maps) CHECK(is_derivation(a, m));
  }
}

TEST_CASE("h1/b2 dimensions and the rank-nullity identities") {
  const Algebra m3 = make_m3(7);
  const Index der = derivation_space(m3).dim();
  const Index inn = inner_derivations(m3).dim();
  CHECK(h1_dim(m3) == der - inn);
  CHECK(b2_dim(m3) == 49 - der);
  const Algebra m1 = make_m1(7, 4);
  CHECK(b2_dim(m1) == 49 - derivation_space(m1).dim());
  for (const Algebra& a : {make_m1(6, 3), make_m2(7, Rat(1)), make_m4(6)}) {
    CHECK(h1_dim(a) + inner_derivations(a).dim() == derivation_space(a).dim());
    CHECK(b2_dim(a) + derivation_space(a).dim() == a.dim() * a.dim());
  }
}

TEST_CASE("Der is closed under commutator; Inn is an ideal") {
  for (const Algebra& a : {make_m1(6, 3), make_m4(6), make_ngf3(6, 1)}) {
    const Index n = a.dim();
    const DerivationBasis der = derivation_space(a);
    const DerivationBasis inn = inner_derivations(a);
    const Subspace der_span = span_of(der.maps, n);
    const Subspace inn_span = span_of(inn.maps, n);
    for (const LinearMap& d1 : der.maps) {
      for (const LinearMap& d2 : der.maps) {
        CHECK(der_span.contains(vec(LinearMap(d1 * d2 - d2 * d1))));
      }
      for (const LinearMap& r : inn.maps) {
        CHECK(inn_span.contains(vec(LinearMap(d1 * r - r * d1))));
      }
    }
  }
}

TEST_CASE("[d, R_x] = R_{d(x)} exactly") {
  std::mt19937_64 rng(23);
  for (const Algebra& a : {make_m1(6, 4), make_m4(5), make_ngf2(5)}) {
    const Index n = a.dim();
    const DerivationBasis der = derivation_space(a);
    for (const LinearMap& d : der.maps) {
      for (int t = 0; t < 3; ++t) {
        const RatVector x = random_vector(rng, n);
        const LinearMap rx = a.right_mult(x);
        const LinearMap lhs = d * rx - rx * d;
        const LinearMap rhs = a.right_mult(RatVector(d * x));
        CHECK(matrices_equal(lhs, rhs));
      }
    }
  }
}

TEST_CASE("graded decomposition: shifts of the tabulated maps") {
  // M1(7, 4): d_j sits in shift j, h1 in shift n-k = 3
  const Algebra a = make_m1(7, 4);
  WeightVector w(7);
  w << 1, 2, 3, 4, 5, 6, 3;
  const auto dec = graded_der_decomposition(a, w);
  CHECK(dec.total_dim() == derivation_space(a).dim());
  REQUIRE(dec.levels.count(3) == 1);
  LinearMap h1 = RatMatrix::Zero(7, 7);
  h1(5, 6) = 1;
  CHECK(span_of(dec.levels.at(3), 7).contains(vec(h1)));
  for (std::int64_t j = 0; j <= 5; ++j) CHECK(dec.levels.count(j) == 1);

  // M1(7, 6): h2 has shift k - 2 = 4
  const Algebra b = make_m1(7, 6);
  WeightVector wb(7);
  wb << 1, 2, 3, 4, 5, 6, 5;
  const auto decb = graded_der_decomposition(b, wb);
  const auto expected = expected_der_basis(Family::M1, 7, 6);
  const LinearMap& h2 = expected.back();
  REQUIRE(decb.levels.count(4) == 1);
  CHECK(span_of(decb.levels.at(4), 7).contains(vec(h2)));
}

TEST_CASE("graded decomposition: abelian pattern counts") {
  const Algebra ab = abelian(4);
  WeightVector w(4);
  w << 1, 2, 3, 4;
  const auto dec = graded_der_decomposition(ab, w);
  for (std::int64_t s = -3; s <= 3; ++s) {
    REQUIRE(dec.levels.count(s) == 1);
    CHECK(static_cast<Index>(dec.levels.at(s).size()) == 4 - (s < 0 ? -s : s));
  }
  CHECK(dec.total_dim() == 16);
}

TEST_CASE("graded decomposition: the diagonal map of M4 sits in shift 0") {
  const Algebra m4 = make_m4(6);
  WeightVector w(6);
  w << 1, -2, -1, 0, 1, 2;
  const auto dec = graded_der_decomposition(m4, w);
  const auto expected = expected_der_basis(Family::M4, 6);
  REQUIRE(dec.levels.count(0) == 1);
  CHECK(span_of(dec.levels.at(0), 6).contains(vec(expected.back())));
  CHECK(dec.total_dim() == derivation_space(m4).dim());
}

TEST_CASE("graded decomposition rejects inadmissible or disconnected weights") {
  const Algebra a = make_m1(6, 3);
  WeightVector bad(6);
  bad << 1, 2, 3, 4, 5, 1;
  CHECK_THROWS_AS(graded_der_decomposition(a, bad), gradation_error);
  const Algebra ab = abelian(3);
  WeightVector gap(3);
  gap << 0, 2, 4;
  CHECK_THROWS_AS(graded_der_decomposition(ab, gap), std::invalid_argument);
}

TEST_CASE("expected_der_basis: counts per family and case") {
  CHECK(expected_der_basis(Family::M1, 7, 4).size() == 7);   // 2k-2 = 6 <= n-1
  CHECK(expected_der_basis(Family::M1, 7, 6).size() == 8);   // 2k-2 = 10 >= n
  CHECK(expected_der_basis(Family::M2, 7).size() == 7);
  CHECK(expected_der_basis(Family::M3, 9).size() == 9);
  CHECK(expected_der_basis(Family::M4, 6).size() == 10);  // 2n-2
  CHECK_THROWS_AS(expected_der_basis(Family::NGF1, 6), std::invalid_argument);
  CHECK_THROWS_AS(expected_der_basis(Family::M1, 6, 2), std::invalid_argument);
  CHECK_THROWS_AS(expected_der_basis(Family::M2, 6), std::invalid_argument);
}

TEST_CASE("expected_der_basis: every map passes and spans inside Der") {
  struct Cell {
    Family f;
    Index n, k;
    Algebra a;
  };
  std::vector<Cell> cells;
  for (Index n = 5; n <= 8; ++n) {
    for (Index k = 3; k <= n - 1; ++k) cells.push_back({Family::M1, n, k, make_m1(n, k)});
    cells.push_back({Family::M4, n, -1, make_m4(n)});
    if (n % 2 == 1) {
      cells.push_back({Family::M2, n, -1, make_m2(n, Rat(1))});
      cells.push_back({Family::M3, n, -1, make_m3(n)});
    }
  }
  for (const Cell& cell : cells) {
    const auto expected = expected_der_basis(cell.f, cell.n, cell.k);
    const Subspace span = span_of(expected, cell.n);
    CHECK(span.dim() == static_cast<Index>(expected.size()));  // independent
    const DerivationBasis der = derivation_space(cell.a);
    const Subspace der_span = span_of(der.maps, cell.n);
    for (const LinearMap& m : expected) {
      CHECK(is_derivation(cell.a, m));
      CHECK(der_span.contains(vec(m)));
    }
    CHECK(der.dim() >= static_cast<Index>(expected.size()));
  }
}
