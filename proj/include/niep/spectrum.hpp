#pragma once

#include <cstddef>
#include <string>

#include "niep/newton.hpp"
#include "niep/polynomial.hpp"
#include "niep/scalar.hpp"

namespace niep {

/// The list (rho, a + ib, a - ib) stored as (rho, a, m = a^2 + b^2). Every
/// formula used downstream touches b only through b^2, so rational inputs
/// stay rational.
class Spectrum3 {
 public:
  /// Validates and moves all three values onto one backend (Float wins if any
  /// input is Float). Throws NonRealRequired when m - a^2 <= 0 and
  /// PerronViolated when rho <= 0 or rho^2 < m.
  static Spectrum3 make(Scalar rho, Scalar a, Scalar modsq);
  static Spectrum3 from_re_im(const Scalar& rho, const Scalar& a, const Scalar& b);
  /// (rho, e^{+-i t pi}): a = cos(t pi), m = 1. Rational when cos(t pi) is.
  static Spectrum3 from_angle(const Scalar& rho, const mpq_class& t,
                              unsigned precision_bits = Backend::kDefaultPrecision);

  const Scalar& rho() const { return rho_; }
  const Scalar& a() const { return a_; }
  const Scalar& modsq() const { return modsq_; }
  /// b^2 = m - a^2.
  Scalar imag_sq() const { return modsq_ - a_ * a_; }
  Backend backend() const { return rho_.backend(); }

  /// rho > |lambda_2| strictly; the Boyle-Handelman hypothesis.
  bool strict_perron() const;

  /// (x - rho)(x^2 - 2ax + m) = x^3 - (rho + 2a) x^2 + (m + 2a rho) x - rho m.
  Polynomial cubic() const;
  /// x^zeros * cubic().
  Polynomial with_zeros(std::size_t zeros) const;
  Spectrum3 to_backend(const Backend& backend) const;

  std::string to_string() const;

 private:
  Spectrum3(Scalar rho, Scalar a, Scalar modsq)
      : rho_(std::move(rho)), a_(std::move(a)), modsq_(std::move(modsq)) {}

  Scalar rho_;
  Scalar a_;
  Scalar modsq_;
};

/// s_k = rho^k + t_k with t_k = 2a t_{k-1} - m t_{k-2}, t_0 = 2, t_1 = 2a.
PowerSums power_sums(const Spectrum3& sigma, std::size_t count);

}  // namespace niep
