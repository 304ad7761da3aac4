#pragma once

#include "filiform/catalog.hpp"
#include "filiform/derivation.hpp"
#include "filiform/gradation.hpp"
#include "filiform/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace filiform {

/// One audited (family, n, params) cell. Every numeric field is computed
/// exactly; the *_ref fields carry the dimension values tabulated in the
/// literature for these families (annotations, never oracles) and the
/// match flags compare them against the computed values.
struct AuditRow {
  std::string family;
  Index n = 0;
  std::string params;  // "k=3", "alpha=1", or ""

  bool leibniz_ok = false;
  bool filiform_ok = false;

  WeightVector weights;        // canonical length-(n-1) witness
  bool grad_admissible = false;
  bool grad_connected = false;
  std::int64_t grad_length = 0;

  Index left_ann_dim = 0;
  Index right_ann_dim = 0;

  Index dim_der = 0;
  Index dim_inn = 0;
  Index h1 = 0;
  Index b2 = 0;
  std::optional<Index> h1_ref;
  std::optional<Index> b2_ref;
  std::optional<bool> h1_match;
  std::optional<bool> b2_match;

  bool graded_sum_ok = false;  // sum of graded pieces == dim Der

  std::optional<Index> expected_count;  // tabulated derivation basis size
  std::optional<bool> expected_ok;      // all maps pass, independent, inside Der
};

/// Runs the full battery over NGF2, NGF3(alpha=1), M1(k) for all valid k,
/// M2(alpha=1), M3, M4 for each n in [n_lo, n_hi], respecting parity
/// constraints. Requires 4 <= n_lo <= n_hi <= 12.
std::vector<AuditRow> run_audit(Index n_lo, Index n_hi);

std::string audit_markdown(const std::vector<AuditRow>& rows);
std::string audit_json(const std::vector<AuditRow>& rows);

}  // namespace filiform
