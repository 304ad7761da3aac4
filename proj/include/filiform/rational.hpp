#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace filiform {

/// Exact rational scalar. All arithmetic is exact; values are kept in
/// lowest terms with a positive denominator (mpq canonical form).
using Rat = mpq_class;

using Index = Eigen::Index;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// A square matrix acting on algebra coordinates. Column convention:
/// column j holds the image of the j-th basis vector.
using LinearMap = RatMatrix;

/// Parses "p" or "p/q" (base 10). Non-canonical input such as "2/4" is
/// normalized. Throws std::invalid_argument on malformed text or a zero
/// denominator.
Rat parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q", with
/// the sign on the numerator.
std::string to_string(const Rat& value);

}  // namespace filiform

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
