#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "niep/scalar.hpp"
#include "niep/spectrum.hpp"

namespace niep {

/// Outcome of one necessary condition. `witness` is the signed margin of the
/// inequality (negative when violated); `witness_index` names the offending k
/// where the condition ranges over an index.
struct ConditionReport {
  std::string name;
  bool holds = false;
  std::optional<Scalar> witness;
  std::optional<long> witness_index;
  std::string notes;
};

struct JllScan {
  std::size_t k_max = 8;
  std::size_t m_max = 8;
};

/// Trace conditions s_k >= 0 for k <= k_max, then the JLL inequalities
/// n^(m-1) s_{km} >= s_k^m for 1 <= k <= k_max, 2 <= m <= m_max, where n is the
/// total dimension including appended zeros.
std::vector<ConditionReport> check_jll(const Spectrum3& sigma, std::size_t n, JllScan scan = {});

/// Smallest n >= 3 for which every report of check_jll holds, or nullopt if
/// none up to `cap` (including when some s_k < 0, which no n can fix).
std::optional<std::size_t> jll_minimal_dimension(const Spectrum3& sigma, JllScan scan, std::size_t cap);

/// 3x3 trace-zero companion realization: rho >= a + b sqrt(3), decided without
/// square roots as rho - a >= 0 and (rho - a)^2 >= 3 (m - a^2).
ConditionReport check_n3_companion(const Spectrum3& sigma);

/// rho >= 2a; with one zero appended this is exactly the condition for a
/// realization alpha I_4 + C.
ConditionReport check_rho_ge_2a(const Spectrum3& sigma);

/// For a <= 0: least N >= 0 with (N + 3) s_2 >= s_1^2. nullopt when no N
/// works: s_1 < 0, or s_2 <= 0 with s_1 != 0. Throws NotApplicable when a > 0.
std::optional<std::size_t> minimal_zeros_nonpositive_a(const Spectrum3& sigma);

struct BhReport {
  ConditionReport report;
  /// max_{0 <= k <= floor(l/2)} (2 cos(k pi / l))^(1 / (l - k))
  Scalar rho0;
};

/// For theta = pi / l and unit modulus: rho^k + 2 cos(k pi / l) > 0 for
/// k = 1..2l (the sequence of cosines has period 2l). Throws BadAngle for
/// l < 2.
BhReport bh_check_rational_angle(const Scalar& rho, long l);

/// Least M with M^(l-k-1) (rho^(l-k) - 2 cos(k pi/l)) >= (rho + 2 cos(pi/l))^(l-k)
/// for every 0 <= k <= floor(l/2). Throws NotApplicable when rho <= rho0.
std::size_t jll_dimension_lower_bound(const Scalar& rho, long l);

bool all_hold(const std::vector<ConditionReport>& reports);

}  // namespace niep
