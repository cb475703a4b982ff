#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "niep/matrix.hpp"
#include "niep/polynomial.hpp"
#include "niep/scalar.hpp"
#include "niep/spectrum.hpp"
#include "niep/verification.hpp"

namespace niep {

/// (1 - rho t)(1 - 2a t + m t^2), the reversal of the cubic, in t.
Polynomial compute_ftilde(const Spectrum3& sigma);

struct SeriesRoot {
  /// l_1 .. l_horizon, with 1 - ftilde^(1/N) = l_1 t + l_2 t^2 + ...
  std::vector<Scalar> l;
  bool all_positive = false;
  std::optional<std::size_t> first_nonpositive_index;
};

/// horizon = 0 means max(N, 3): at least the degree of ftilde, so that N = 1
/// still sees the sign of its t^2 term. Throws BadDimension for N = 0.
SeriesRoot series_l_coefficients(const Spectrum3& sigma, std::size_t n, std::size_t horizon = 0);

/// x^n - l_1 x^(n-1) - ... - l_n.
Polynomial block_polynomial(const std::vector<Scalar>& l, std::size_t n);

struct Ladder {
  /// r_1 .. r_{N-1}, each of degree < N.
  std::vector<Polynomial> remainders;
  Polynomial final_quotient;
};

/// F = x^(N^2-3) f: r_1 = F mod e, q_1 = F div e, then r_i, q_i from q_{i-1}.
/// Throws BadModulus unless e is monic of degree N.
Ladder division_ladder(const Spectrum3& sigma, const Polynomial& e, std::size_t n);

/// (...(q_{N-1} e + r_{N-1}) e + ...) e + r_1.
Polynomial reassemble(const Polynomial& e, const Ladder& ladder);

struct MultiBlockLayout {
  std::size_t n = 0;
  SeriesRoot series;
  Polynomial e;
  Ladder ladder;
  /// Negated remainder coefficients: block u - 1 holds -r_u, ascending powers.
  std::vector<Scalar> last_row;
  bool feasible = false;
  /// 1-based position within last_row of the first negative entry.
  std::optional<std::size_t> first_negative_index;
};

/// The ladder only runs when every l_i is positive; otherwise the layout is
/// infeasible with empty remainders.
MultiBlockLayout build_multiblock_layout(const Spectrum3& sigma, std::size_t n);

/// N^2 x N^2: companion(e) blocks on the diagonal, a 1 joining the last row of
/// block i to the first column of block i + 1, and last_row across the first
/// N^2 - N columns of the bottom row. Throws InfeasibleLayout.
DenseMatrix assemble_multiblock(const MultiBlockLayout& layout);

SearchOutcome find_min_multiblock(const Spectrum3& sigma, std::size_t max_n = 16);

}  // namespace niep
