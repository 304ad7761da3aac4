#include "filiform/catalog.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace filiform {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void validate_table(Algebra& a, const std::string& who) {
  auto defects = leibniz_defect(a);
  if (defects.empty()) return;
  std::ostringstream os;
  os << who << ": assembled table violates the Leibniz identity (" << defects.size()
     << " tuple" << (defects.size() == 1 ? "" : "s") << ")";
  throw leibniz_error(os.str(), std::move(defects));
}

// Writer with the 1-based indexing the multiplication tables are stated in.
struct TableWriter {
  Algebra& a;
  void operator()(Index i, Index j, Index k, Rat v) const { a.add(i - 1, j - 1, k - 1, v); }
};

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::NGF1: return "NGF1";
    case Family::NGF2: return "NGF2";
    case Family::NGF3: return "NGF3";
    case Family::F1: return "F1";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
    case Family::M1: return "M1";
    case Family::M2: return "M2";
    case Family::M3: return "M3";
    case Family::M4: return "M4";
  }
  throw std::invalid_argument("family_name: unknown family");
}

Family parse_family(const std::string& tag) {
  for (Family f : {Family::NGF1, Family::NGF2, Family::NGF3, Family::F1, Family::F2,
                   Family::F3, Family::M1, Family::M2, Family::M3, Family::M4}) {
    if (family_name(f) == tag) return f;
  }
  throw std::invalid_argument("unknown family tag '" + tag + "'");
}

Algebra make_ngf1(Index n) {
  require(n >= 3, "NGF1 requires n >= 3");
  Algebra a(n);
  TableWriter G{a};
  G(1, 1, 3, 1);
  for (Index i = 2; i <= n - 1; ++i) G(i, 1, i + 1, 1);
  return a;
}

Algebra make_ngf2(Index n) {
  require(n >= 3, "NGF2 requires n >= 3");
  Algebra a(n);
  TableWriter G{a};
  G(1, 1, 3, 1);
  for (Index i = 3; i <= n - 1; ++i) G(i, 1, i + 1, 1);
  return a;
}

Algebra make_ngf3(Index n, int alpha) {
  require(n >= 3, "NGF3 requires n >= 3");
  require(alpha == 0 || alpha == 1, "NGF3 requires alpha in {0, 1}");
  require(alpha == 0 || n % 2 == 0, "NGF3 requires alpha = 0 for odd n");
  Algebra a(n);
  TableWriter G{a};
  for (Index i = 2; i <= n - 1; ++i) {
    G(i, 1, i + 1, 1);
    G(1, i, i + 1, -1);
  }
  if (alpha == 1) {
    for (Index i = 2; i <= n - 1; ++i) {
      G(i, n + 1 - i, n, (i % 2 == 0) ? -1 : 1);  // alpha * (-1)^(i+1)
    }
  }
  return a;
}

Algebra make_f1(Index n, std::vector<Rat> alphas, const Rat& theta) {
  require(n >= 4, "F1 requires n >= 4");
  if (static_cast<Index>(alphas.size()) == n - 4) alphas.push_back(Rat(0));  // a_n = 0
  require(static_cast<Index>(alphas.size()) == n - 3,
          "F1 expects a_4..a_n (n - 3 values) or a_4..a_{n-1} (n - 4 values)");
  const auto alpha = [&](Index t) -> const Rat& {  // a_t, 4 <= t <= n
    return alphas[static_cast<std::size_t>(t - 4)];
  };
  Algebra a(n);
  TableWriter G{a};
  G(1, 1, 3, 1);
  for (Index i = 2; i <= n - 1; ++i) G(i, 1, i + 1, 1);
  // [e_1, e_2] = a_4 e_4 + ... + a_{n-1} e_{n-1} + theta e_n
  for (Index t = 4; t <= n - 1; ++t) G(1, 2, t, alpha(t));
  G(1, 2, n, theta);
  // [e_j, e_2] = a_4 e_{j+2} + a_5 e_{j+3} + ... + a_{n+2-j} e_n, 2 <= j <= n-2
  for (Index j = 2; j <= n - 2; ++j) {
    for (Index t = 4; t <= n + 2 - j; ++t) G(j, 2, t + j - 2, alpha(t));
  }
  validate_table(a, "F1");
  return a;
}

Algebra make_f2(Index n, std::vector<Rat> betas, const Rat& gamma) {
  require(n >= 4, "F2 requires n >= 4");
  require(static_cast<Index>(betas.size()) == n - 3, "F2 expects b_3..b_{n-1} (n - 3 values)");
  const auto beta = [&](Index t) -> const Rat& {  // b_t, 3 <= t <= n-1
    return betas[static_cast<std::size_t>(t - 3)];
  };
  Algebra a(n);
  TableWriter G{a};
  G(1, 1, 3, 1);
  for (Index i = 3; i <= n - 1; ++i) G(i, 1, i + 1, 1);
  // [e_1, e_2] = b_3 e_4 + b_4 e_5 + ... + b_{n-1} e_n
  for (Index t = 3; t <= n - 1; ++t) G(1, 2, t + 1, beta(t));
  G(2, 2, n, gamma);
  // [e_j, e_2] = b_3 e_{j+2} + ... + b_{n+1-j} e_n, 3 <= j <= n-2
  for (Index j = 3; j <= n - 2; ++j) {
    for (Index t = 3; t <= n + 1 - j; ++t) G(j, 2, t + j - 1, beta(t));
  }
  validate_table(a, "F2");
  return a;
}

Algebra make_f3(Index n, const Rat& theta1, const Rat& theta2, const Rat& theta3, int alpha,
                const std::vector<TailEntry>& tail) {
  require(n >= 4, "F3 requires n >= 4");
  require(alpha == 0 || alpha == 1, "F3 requires alpha in {0, 1}");
  require(alpha == 0 || n % 2 == 0, "F3 requires alpha = 0 for odd n");
  Algebra a(n);
  TableWriter G{a};
  for (Index i = 2; i <= n - 1; ++i) G(i, 1, i + 1, 1);
  for (Index i = 3; i <= n - 1; ++i) G(1, i, i + 1, -1);
  G(1, 1, n, theta1);
  G(1, 2, 3, -1);
  G(1, 2, n, theta2);
  G(2, 2, n, theta3);
  if (alpha == 1) {
    for (Index i = 2; i <= n - 1; ++i) {
      G(i, n + 1 - i, n, (i % 2 == 0) ? -1 : 1);
    }
  }
  std::set<std::pair<Index, Index>> seen;
  for (const TailEntry& t : tail) {
    require(t.i >= 1 && t.i < t.j && t.k < n && t.k >= t.i + t.j + 2,
            "F3 tail entries require 1 <= i < j and i + j + 2 <= k < n (0-based)");
    require(sgn(t.value) != 0, "F3 tail entries must be nonzero");
    require(seen.emplace(t.i, t.j).second, "F3 tail has a duplicate (i, j) position");
    a.add(t.i, t.j, t.k, t.value);
    a.add(t.j, t.i, t.k, -t.value);
  }
  validate_table(a, "F3");
  return a;
}

Algebra make_m1(Index n, Index k) {
  require(n >= 4, "M1 requires n >= 4");
  if (k < 3 || k > n - 1) {
    std::ostringstream os;
    os << "M1 requires 3 <= k <= n - 1 (got k = " << k << ", n = " << n << ")";
    throw std::invalid_argument(os.str());
  }
  Algebra a(n);
  TableWriter G{a};
  for (Index i = 1; i <= n - 2; ++i) G(i, 1, i + 1, 1);
  for (Index i = 1; i <= n - k; ++i) G(i, n, k + i - 1, 1);
  return a;
}

Algebra make_m2(Index n, const Rat& alpha) {
  require(n >= 5, "M2 requires n >= 5");
  require(n % 2 == 1, "M2 requires odd n");
  require(sgn(alpha) != 0, "M2 requires alpha != 0");
  Algebra a(n);
  TableWriter G{a};
  for (Index i = 1; i <= n - 2; ++i) G(i, 1, i + 1, 1);
  const Index h = (n + 1) / 2;
  for (Index i = 1; i <= (n - 1) / 2; ++i) G(i, n, h + i - 1, 1);
  G(n, n, n - 1, alpha);
  return a;
}

Algebra make_m3(Index n) {
  require(n >= 5, "M3 requires n >= 5");
  require(n % 2 == 1, "M3 requires odd n");
  Algebra a(n);
  TableWriter G{a};
  for (Index i = 1; i <= n - 2; ++i) G(i, 1, i + 1, 1);
  G(n, n, n - 1, 1);
  return a;
}

Algebra make_m4(Index n) {
  require(n >= 4, "M4 requires n >= 4");
  Algebra a(n);
  TableWriter G{a};
  G(1, 1, n, 1);
  for (Index i = 2; i <= n - 1; ++i) {
    G(i, 1, i + 1, 1);
    G(1, i, i + 1, -1);
  }
  return a;
}

}  // namespace filiform
