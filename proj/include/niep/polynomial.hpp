#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "niep/scalar.hpp"

namespace niep {

/// Dense univariate polynomial, coefficients in ascending degree order.
/// Trailing zero coefficients are trimmed on construction, so the leading
/// coefficient is nonzero unless the polynomial is identically zero (stored as
/// a single zero coefficient, degree 0).
class Polynomial {
 public:
  /// Zero polynomial on the Rational backend.
  Polynomial();
  explicit Polynomial(std::vector<Scalar> ascending);

  static Polynomial zero(const Backend& backend);
  static Polynomial constant(const Scalar& c);
  /// x^n on the given backend.
  static Polynomial monomial(std::size_t n, const Backend& backend);
  /// Builds from coefficients listed highest degree first, the way they are
  /// usually written down.
  static Polynomial from_descending(std::vector<Scalar> descending);

  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_exact_zero(); }
  bool is_monic() const { return leading().compare(leading().one_like()) == 0; }
  Backend backend() const { return coeffs_.front().backend(); }

  /// Coefficient of x^i; zero (same backend) beyond the degree.
  Scalar operator[](std::size_t i) const;
  const Scalar& leading() const { return coeffs_.back(); }
  std::span<const Scalar> coeffs() const { return coeffs_; }

  Scalar evaluate(const Scalar& at) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  /// Multiplication by x^k.
  Polynomial shifted_up(std::size_t k) const;

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

  /// "x^3 - 33/10*x^2 + ..." highest degree first.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

inline Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
inline Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

/// Schoolbook long division: dividend = divisor * quotient + remainder with
/// deg(remainder) < deg(divisor), or remainder = 0.
DivRem poly_divrem(const Polynomial& dividend, const Polynomial& divisor);

/// Taylor shift: returns q with q(y) = p(y + c).
Polynomial poly_shift(const Polynomial& p, const Scalar& c);

/// t^n * p(1/t): the coefficient vector reversed into length n + 1.
Polynomial poly_reverse(const Polynomial& p, std::size_t n);

/// (x + c)^n, coefficients from the binomial theorem.
Polynomial binomial_power(const Scalar& c, std::size_t n);

}  // namespace niep
