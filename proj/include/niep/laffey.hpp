#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "niep/matrix.hpp"
#include "niep/newton.hpp"
#include "niep/polynomial.hpp"
#include "niep/scalar.hpp"
#include "niep/spectrum.hpp"
#include "niep/verification.hpp"

namespace niep {

/// Seed data for the m x m matrix X_m whose diagonals carry x_1 .. x_m and
/// whose superdiagonal is 1, 2, ..., m - 1.
///
/// With x^(m-3) f(x) = x^m + p_1 x^(m-1) + ... + p_m, the scaled polynomial q
/// has q_i = p_i / (m (m-1) ... (m-i+1)) and x_k is the k-th power sum of its
/// roots.
struct LaffeyCandidate {
  std::size_t dim = 0;
  Polynomial q;
  PowerSums x;
  /// Per x_k, the summed magnitude of the Newton terms that produced it. On
  /// Float the sign of x_k is trusted only beyond eps times this.
  std::vector<Scalar> magnitudes;
  bool feasible = false;
  std::optional<std::size_t> first_negative_index;
  /// min_k x_k, and min_k x_k / magnitude_k (how far inside the sign rule the
  /// tightest entry sits).
  Scalar min_margin;
  Scalar min_relative_margin;
};

/// Throws BadDimension for m < 3.
LaffeyCandidate build_laffey_candidate(const Spectrum3& sigma, std::size_t dim);

/// Entry (i, j), 1-based: x_(i-j+1) for i >= j, j at (j, j+1), else 0.
/// Throws InfeasibleCandidate unless the candidate is feasible.
DenseMatrix assemble_Xm(const LaffeyCandidate& candidate);

/// Scans every m = 3..max_dim with no monotonicity assumption. On success the
/// notes carry the min and relative margins of the chosen candidate.
SearchOutcome find_min_laffey(const Spectrum3& sigma, std::size_t max_dim = 512);

}  // namespace niep
