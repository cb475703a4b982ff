#include "niep/shifted_companion.hpp"

#include "niep/error.hpp"

namespace niep {

namespace {

// F(y + alpha) for F = x^zeros * cubic, as (y + alpha)^zeros times the
// shifted cubic: linear in the dimension instead of a quadratic Taylor shift.
Polynomial shifted_target(const Spectrum3& sigma, std::size_t zeros, const Scalar& alpha) {
  return binomial_power(alpha, zeros) * poly_shift(sigma.cubic(), alpha);
}

Scalar trace_alpha(const Spectrum3& sigma, std::size_t dim) {
  const Scalar& rho = sigma.rho();
  return (rho + sigma.a() * rho.like(2)) / rho.like(static_cast<long>(dim));
}

}  // namespace

ShiftedCompanionCandidate try_shifted_companion(const Spectrum3& sigma, std::size_t zeros) {
  ShiftedCompanionCandidate c;
  c.zeros = zeros;
  c.dim = zeros + 3;
  c.alpha = trace_alpha(sigma, c.dim);
  c.shifted_poly = shifted_target(sigma, zeros, c.alpha);

  c.feasible = true;
  if (c.alpha.negative()) {
    c.feasible = false;
    c.first_positive_coeff_index = 0;
    return c;
  }
  for (std::size_t j = 1; j <= c.dim; ++j) {
    if (!c.shifted_poly[c.dim - j].nonpositive()) {
      c.feasible = false;
      c.first_positive_coeff_index = j;
      break;
    }
  }
  if (c.feasible) {
    DenseMatrix m = DenseMatrix::companion(c.shifted_poly);
    for (std::size_t i = 0; i < c.dim; ++i) m(i, i) += c.alpha;
    c.matrix = std::move(m);
  }
  return c;
}

SearchOutcome find_min_shifted_companion(const Spectrum3& sigma, std::size_t max_zeros) {
  SearchOutcome out;
  out.method = Method::ShiftedCompanion;
  out.cap = max_zeros;
  if ((sigma.rho() - sigma.a() * sigma.a().like(2)).negative()) {
    out.notes = "rho < 2a: the coefficient P_4 is eventually positive, so this method cannot succeed for all large N";
  }
  for (std::size_t n = 0; n <= max_zeros; ++n) {
    ShiftedCompanionCandidate c = try_shifted_companion(sigma, n);
    SearchAttempt at;
    at.parameter = n;
    at.feasible = c.feasible;
    if (c.first_positive_coeff_index) {
      at.witness_index = static_cast<long>(*c.first_positive_coeff_index);
      at.witness = *c.first_positive_coeff_index == 0 ? -c.alpha : c.shifted_poly[c.dim - *c.first_positive_coeff_index];
    }
    out.attempts.push_back(std::move(at));
    if (c.feasible) {
      std::string notes = "alpha = " + c.alpha.to_display();
      if (sigma.backend().is_float()) notes += "; approximate (float sign rule)";
      out.result = certify(Method::ShiftedCompanion, std::move(*c.matrix), sigma, notes);
      break;
    }
  }
  return out;
}

P4Diagnostic p4_diagnostic(const Spectrum3& sigma, std::size_t dim) {
  if (dim < 4) throw Error(ErrorKind::BadDimension, "P_4 needs dimension at least 4");
  const Scalar& rho = sigma.rho();
  const Scalar& a = sigma.a();
  const Scalar b2 = sigma.imag_sq();
  const Scalar alpha = trace_alpha(sigma, dim);
  const Polynomial g = shifted_target(sigma, dim - 3, alpha);

  auto k = [&](long v) { return rho.like(v); };
  const Scalar n = k(static_cast<long>(dim));
  const Scalar r = rho - alpha;
  const Scalar ap = a - alpha;
  // 2 Re((a' + ib)^k) for k = 2, 4
  const Scalar t2 = k(2) * (ap * ap - b2);
  const Scalar t4 = k(2) * (ap.pow(4) - k(6) * ap * ap * b2 + b2 * b2);
  const Scalar tail = k(static_cast<long>(dim - 3));

  P4Diagnostic d;
  d.p4 = g[dim - 4];
  d.s2 = r.pow(2) + t2 + tail * alpha.pow(2);
  d.s4 = r.pow(4) + t4 + tail * alpha.pow(4);
  d.f_of_n = (rho - k(2) * a) * (rho * rho + k(4) * b2) * n * n +
             (k(4) * rho * a * a + k(8) * rho * b2 + k(16) * a * b2 -
              (k(3) * rho.pow(3) + k(2) * rho * rho * a + k(8) * a.pow(3))) *
                 n +
             k(12) * rho * rho * a + k(24) * rho * a * a + k(2) * rho.pow(3) + k(16) * a.pow(3);
  d.closed_form = (k(2) * a + rho) * (n - k(3)) / (k(2) * n.pow(3)) * d.f_of_n;
  return d;
}

}  // namespace niep
