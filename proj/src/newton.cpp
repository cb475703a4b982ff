#include "niep/newton.hpp"

#include "niep/error.hpp"

namespace niep {

TrackedPowerSums newton_coeffs_to_powersums_tracked(const Polynomial& monic, std::size_t count) {
  if (!monic.is_monic()) throw Error(ErrorKind::NotMonic, "power sums need a monic polynomial");
  if (count == 0) throw Error(ErrorKind::UsageError, "need at least one power sum");
  const std::size_t n = monic.degree();
  const Scalar zero = monic.leading().zero_like();

  // p_j is the coefficient of x^(n-j).
  auto p = [&](std::size_t j) { return j <= n ? monic[n - j] : zero; };

  TrackedPowerSums out;
  out.sums.values.reserve(count);
  out.magnitudes.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) {
    Scalar acc = zero;
    Scalar mag = zero;
    if (k <= n) {
      Scalar term = p(k) * zero.like(static_cast<long>(k));
      mag += term.abs();
      acc += term;
    }
    for (std::size_t j = 1; j < k && j <= n; ++j) {
      Scalar pj = p(j);
      if (pj.is_exact_zero()) continue;
      Scalar term = pj * out.sums.values[k - j - 1];
      mag += term.abs();
      acc += term;
    }
    out.sums.values.push_back(-acc);
    out.magnitudes.push_back(std::move(mag));
  }
  return out;
}

PowerSums newton_coeffs_to_powersums(const Polynomial& monic, std::size_t count) {
  return newton_coeffs_to_powersums_tracked(monic, count).sums;
}

Polynomial newton_powersums_to_coeffs(const PowerSums& s) {
  const std::size_t n = s.size();
  if (n == 0) throw Error(ErrorKind::UsageError, "need at least one power sum");
  const Scalar zero = s.values.front().zero_like();
  // p[j] multiplies x^(n-j); p_k = -(s_k + p_1 s_{k-1} + ... + p_{k-1} s_1) / k.
  std::vector<Scalar> p(n + 1, zero);
  p[0] = zero.one_like();
  for (std::size_t k = 1; k <= n; ++k) {
    Scalar acc = s.s(k);
    for (std::size_t j = 1; j < k; ++j) acc += p[j] * s.s(k - j);
    p[k] = -acc / zero.like(static_cast<long>(k));
  }
  return Polynomial::from_descending(std::move(p));
}

}  // namespace niep
