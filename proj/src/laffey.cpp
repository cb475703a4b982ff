#include "niep/laffey.hpp"

#include "niep/error.hpp"

namespace niep {

LaffeyCandidate build_laffey_candidate(const Spectrum3& sigma, std::size_t dim) {
  if (dim < 3) throw Error(ErrorKind::BadDimension, "X_m needs m >= 3");
  const Polynomial f = sigma.cubic();
  const Scalar one = sigma.rho().one_like();

  // only p_1, p_2, p_3 are nonzero
  std::vector<Scalar> asc(dim + 1, one.zero_like());
  asc[dim] = one;
  Scalar falling = one;
  for (std::size_t i = 1; i <= 3; ++i) {
    falling *= one.like(static_cast<long>(dim - i + 1));
    asc[dim - i] = f[3 - i] / falling;
  }

  LaffeyCandidate c;
  c.dim = dim;
  c.q = Polynomial(std::move(asc));
  TrackedPowerSums t = newton_coeffs_to_powersums_tracked(c.q, dim);
  c.x = std::move(t.sums);
  c.magnitudes = std::move(t.magnitudes);

  c.feasible = true;
  for (std::size_t k = 1; k <= dim; ++k) {
    const Scalar& xk = c.x.s(k);
    const Scalar& mag = c.magnitudes[k - 1];
    bool ok = sigma.backend().is_rational() ? xk.sign() >= 0 : xk.nonnegative(&mag);
    if (!ok && c.feasible) {
      c.feasible = false;
      c.first_negative_index = k;
    }
    if (k == 1 || xk < c.min_margin) c.min_margin = xk;
    if (!mag.is_exact_zero()) {
      Scalar rel = xk / mag;
      if (k == 1 || rel < c.min_relative_margin) c.min_relative_margin = rel;
    }
  }
  return c;
}

DenseMatrix assemble_Xm(const LaffeyCandidate& candidate) {
  if (!candidate.feasible) {
    throw Error(ErrorKind::InfeasibleCandidate,
                "X_" + std::to_string(candidate.dim) + " has negative x_" +
                    std::to_string(candidate.first_negative_index.value_or(0)));
  }
  const std::size_t n = candidate.dim;
  DenseMatrix m(n, n, candidate.q.backend());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c <= r; ++c) m(r, c) = candidate.x.s(r - c + 1);
    if (r + 1 < n) m(r, r + 1) = candidate.q.leading().like(static_cast<long>(r + 1));
  }
  return m;
}

SearchOutcome find_min_laffey(const Spectrum3& sigma, std::size_t max_dim) {
  SearchOutcome out;
  out.method = Method::Laffey;
  out.cap = max_dim;
  for (std::size_t dim = 3; dim <= max_dim; ++dim) {
    LaffeyCandidate c = build_laffey_candidate(sigma, dim);
    SearchAttempt at;
    at.parameter = dim;
    at.feasible = c.feasible;
    if (c.first_negative_index) {
      at.witness_index = static_cast<long>(*c.first_negative_index);
      at.witness = c.x.s(*c.first_negative_index);
    }
    out.attempts.push_back(std::move(at));
    if (c.feasible) {
      std::string notes = "min x_k = " + c.min_margin.to_display() +
                          "; min x_k / magnitude_k = " + c.min_relative_margin.to_display();
      if (sigma.backend().is_float()) notes += "; approximate (float sign rule)";
      out.margin = c.min_margin;
      out.relative_margin = c.min_relative_margin;
      out.result = certify(Method::Laffey, assemble_Xm(c), sigma, notes);
      break;
    }
  }
  return out;
}

}  // namespace niep
