#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "niep/polynomial.hpp"
#include "niep/scalar.hpp"

namespace niep {

/// Formal power series truncated mod t^(order+1).
class TruncatedSeries {
 public:
  /// Pads with zeros or truncates `coeffs` to exactly order + 1 terms.
  TruncatedSeries(std::vector<Scalar> coeffs, std::size_t order);
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Scalar& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::span<const Scalar> coeffs() const { return coeffs_; }
  Backend backend() const { return coeffs_.front().backend(); }

  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
  friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

  TruncatedSeries pow(std::size_t n) const;

 private:
  std::vector<Scalar> coeffs_;
};

/// g with g^n = f mod t^(order+1), for f(0) = 1 exactly.
///
/// Comparing coefficients in n f g' = g f' gives
///   g_k = (1/k) sum_{j=1..k} (j (n + 1) / n - k) f_j g_{k-j},
/// so each term needs only earlier ones. Throws BadConstantTerm if f(0) != 1.
TruncatedSeries series_nth_root(const TruncatedSeries& f, std::size_t n);

}  // namespace niep
