#pragma once

#include "filiform/algebra.hpp"

#include <string>
#include <vector>

namespace filiform {

/// The named families of filiform Leibniz algebra multiplication tables.
enum class Family { NGF1, NGF2, NGF3, F1, F2, F3, M1, M2, M3, M4 };

std::string family_name(Family f);
/// Parses a family tag such as "NGF1" or "M1"; throws on unknown tags.
Family parse_family(const std::string& tag);

/// Naturally graded families (one-generator chain, two-generator chain,
/// and the antisymmetric chain with the top-degree pairing).
Algebra make_ngf1(Index n);
Algebra make_ngf2(Index n);
/// alpha in {0, 1}; alpha = 0 is required when n is odd.
Algebra make_ngf3(Index n, int alpha);

/// First filiform family. alphas holds a_4..a_n (length n - 3); a vector
/// of length n - 4 (a_4..a_{n-1}) is also accepted, with a_n taken as 0.
/// theta is the independent top coefficient of [e_1, e_2]. The assembled
/// table is validated; a nonzero Leibniz defect throws leibniz_error.
Algebra make_f1(Index n, std::vector<Rat> alphas, const Rat& theta);

/// Second filiform family, betas = b_3..b_{n-1} (length n - 3), gamma the
/// coefficient of [e_2, e_2]. Validated like make_f1.
Algebra make_f2(Index n, std::vector<Rat> betas, const Rat& gamma);

/// Antisymmetric tail entry for make_f3, 0-based: contributes value to
/// g_ijk and -value to g_jik. Requires 1 <= i < j and i + j + 2 <= k < n.
struct TailEntry {
  Index i, j, k;
  Rat value;
};

/// Third filiform family (skew chain): theta1/theta2/theta3 are the top
/// coefficients of [e_1,e_1], [e_1,e_2], [e_2,e_2]; alpha in {0,1} (0 for
/// odd n) switches the top-degree pairing; tail holds the free
/// antisymmetric products. The family is constrained rather than free, so
/// the constructor validates the Leibniz identity and throws
/// leibniz_error listing the violated tuples when the tail is
/// inconsistent.
Algebra make_f3(Index n, const Rat& theta1, const Rat& theta2, const Rat& theta3, int alpha,
                const std::vector<TailEntry>& tail);

/// Length-(n-1) graded families.
Algebra make_m1(Index n, Index k);  // 3 <= k <= n-1
Algebra make_m2(Index n, const Rat& alpha);  // n odd, alpha != 0
Algebra make_m3(Index n);                    // n odd
Algebra make_m4(Index n);

}  // namespace filiform
