#pragma once

#include <cstddef>
#include <vector>

#include "niep/polynomial.hpp"
#include "niep/scalar.hpp"

namespace niep {

/// s_1 .. s_K, the power sums of a root multiset. values[k-1] = s_k.
struct PowerSums {
  std::vector<Scalar> values;

  std::size_t size() const { return values.size(); }
  /// 1-based access matching the usual s_k notation.
  const Scalar& s(std::size_t k) const { return values.at(k - 1); }
};

/// Power sums s_1..s_k of the roots of a monic polynomial, via
/// s_k + p_1 s_{k-1} + ... + p_{k-1} s_1 + k p_k = 0 with p_j = 0 for j > n.
/// Throws NotMonic.
PowerSums newton_coeffs_to_powersums(const Polynomial& monic, std::size_t k);

/// Same recurrence, also returning for each s_k the sum of the absolute values
/// of the terms it was formed from. On Float the cancellation in s_k is
/// bounded relative to that magnitude, which is what sign decisions scale by.
struct TrackedPowerSums {
  PowerSums sums;
  std::vector<Scalar> magnitudes;
};
TrackedPowerSums newton_coeffs_to_powersums_tracked(const Polynomial& monic, std::size_t k);

/// The monic polynomial of degree s.size() whose roots have power sums s.
Polynomial newton_powersums_to_coeffs(const PowerSums& s);

}  // namespace niep
