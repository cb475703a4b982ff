#pragma once

#include <cstddef>
#include <optional>

#include "niep/matrix.hpp"
#include "niep/polynomial.hpp"
#include "niep/scalar.hpp"
#include "niep/spectrum.hpp"
#include "niep/verification.hpp"

namespace niep {

/// alpha I_m + C with C the companion matrix of g(y) = F(y + alpha), where
/// F = x^N (x - rho)(x^2 - 2ax + m), m = N + 3 and alpha = s_1 / m, so that C
/// has trace zero.
struct ShiftedCompanionCandidate {
  std::size_t zeros = 0;
  std::size_t dim = 0;
  Scalar alpha;
  Polynomial shifted_poly;
  bool feasible = false;
  /// Least j with P_j > 0, where P_j is the coefficient of y^(m-j) in g; 0
  /// when alpha itself is negative (s_1 < 0).
  std::optional<std::size_t> first_positive_coeff_index;
  std::optional<DenseMatrix> matrix;
};

ShiftedCompanionCandidate try_shifted_companion(const Spectrum3& sigma, std::size_t zeros);

SearchOutcome find_min_shifted_companion(const Spectrum3& sigma, std::size_t max_zeros = 512);

struct P4Diagnostic {
  /// Coefficient of y^(N-4) of the shifted polynomial, read off directly.
  Scalar p4;
  /// ((2a + rho)(N - 3) / (2 N^3)) f(N).
  Scalar closed_form;
  Scalar f_of_n;
  /// Power sums of the shifted list (rho - alpha, a - alpha +- ib, -alpha x (N-3)).
  Scalar s2;
  Scalar s4;
};

/// For total dimension N >= 4 (BadDimension otherwise). Newton's identities
/// give p4 = -(s4 - s2^2/2)/4 because the shifted trace vanishes.
P4Diagnostic p4_diagnostic(const Spectrum3& sigma, std::size_t dim);

}  // namespace niep
