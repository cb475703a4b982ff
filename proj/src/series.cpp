#include "niep/series.hpp"

#include "niep/error.hpp"

namespace niep {

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
  coeffs_.resize(order + 1, coeffs_.front().zero_like());
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  return TruncatedSeries(std::vector<Scalar>(p.coeffs().begin(), p.coeffs().end()), order);
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  Backend backend = common_backend(lhs.coeffs_.front(), rhs.coeffs_.front());
  std::vector<Scalar> out(order + 1, Scalar::from_int(0, backend));
  for (std::size_t i = 0; i <= order; ++i) {
    if (lhs.coeffs_[i].is_exact_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return TruncatedSeries(std::move(out), order);
}

bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  if (lhs.order() != rhs.order()) return false;
  for (std::size_t i = 0; i <= lhs.order(); ++i) {
    if (!(lhs.coeffs_[i] == rhs.coeffs_[i])) return false;
  }
  return true;
}

TruncatedSeries TruncatedSeries::pow(std::size_t n) const {
  std::vector<Scalar> unit(order() + 1, coeffs_.front().zero_like());
  unit[0] = coeffs_.front().one_like();
  TruncatedSeries result(std::move(unit), order());
  TruncatedSeries base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

TruncatedSeries series_nth_root(const TruncatedSeries& f, std::size_t n) {
  const Scalar& f0 = f[0];
  if (f0.compare(f0.one_like()) != 0) {
    throw Error(ErrorKind::BadConstantTerm, "series root needs constant term 1, got " + f0.to_display());
  }
  if (n == 0) throw Error(ErrorKind::UsageError, "root index must be at least 1");
  if (n == 1) return f;

  const std::size_t order = f.order();
  std::vector<Scalar> g(order + 1, f0.zero_like());
  g[0] = f0.one_like();
  const Scalar nn = f0.like(static_cast<long>(n));
  for (std::size_t k = 1; k <= order; ++k) {
    Scalar acc = f0.zero_like();
    for (std::size_t j = 1; j <= k; ++j) {
      if (f[j].is_exact_zero()) continue;
      // (j (n + 1) - k n) / n
      Scalar weight = f0.like(static_cast<long>(j * (n + 1)) - static_cast<long>(k * n)) / nn;
      acc += weight * f[j] * g[k - j];
    }
    g[k] = acc / f0.like(static_cast<long>(k));
  }
  return TruncatedSeries(std::move(g), order);
}

}  // namespace niep
