#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <variant>

#include "niep/big_float.hpp"

namespace niep {

enum class BackendKind { Rational, Float };

/// Rational, or Float with a precision in bits. Two Float backends with
/// different precisions are distinct backends.
struct Backend {
  BackendKind kind = BackendKind::Rational;
  unsigned precision_bits = 0;

  static constexpr unsigned kDefaultPrecision = 256;
  static constexpr unsigned kMinPrecision = 64;

  static Backend rational() { return {}; }
  static Backend floating(unsigned bits = kDefaultPrecision);

  bool is_rational() const { return kind == BackendKind::Rational; }
  bool is_float() const { return kind == BackendKind::Float; }
  std::string name() const;

  friend bool operator==(const Backend&, const Backend&) = default;
};

/// A number on one of the two backends. Arithmetic between different backends
/// throws ErrorKind::BackendMismatch. Integer literals convert to Rational, so
/// backend-generic code builds constants with `like(n)`.
///
/// Sign queries come in two flavors. `sign()` is the raw sign of the stored
/// value. The predicates (`nonnegative()`, `positive()`, ...) apply the
/// tolerance rule: exact on Rational, and on Float a value counts as zero when
/// |v| <= eps * scale with eps = 2^(-P/2).
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(long value) : value_(mpq_class(value)) {}  // NOLINT: implicit by design of literals
  Scalar(const mpq_class& value) : value_(value) {}  // NOLINT
  Scalar(BigFloat value) : value_(std::move(value)) {}  // NOLINT

  static Scalar rational(long num, long den = 1);
  static Scalar from_int(long value, const Backend& backend);
  /// Parses "7/5", "-3", "1.4", "3.66e-2" exactly into a rational. Throws
  /// ErrorKind::ParseError on malformed text.
  static Scalar parse_rational(const std::string& text);
  /// Parses into the given backend: exact rational parsing, then rounding if
  /// the backend is Float. Hex float literals are accepted on Float only.
  static Scalar parse(const std::string& text, const Backend& backend);
  /// cos(t*pi); exact when t*6 is an integer (values 0, +-1/2, +-1), otherwise
  /// on Float at the requested precision.
  static Scalar cos_pi(const mpq_class& t, unsigned precision_bits);

  Backend backend() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  bool is_float() const { return !is_rational(); }

  const mpq_class& as_rational() const;
  const BigFloat& as_float() const;

  Scalar zero_like() const { return from_int(0, backend()); }
  Scalar one_like() const { return from_int(1, backend()); }
  Scalar like(long value) const { return from_int(value, backend()); }
  Scalar to_backend(const Backend& backend) const;

  int sign() const;
  bool is_exact_zero() const;

  Scalar epsilon() const;
  bool is_zero(const Scalar* scale = nullptr) const;
  bool nonnegative(const Scalar* scale = nullptr) const;
  bool nonpositive(const Scalar* scale = nullptr) const;
  bool positive(const Scalar* scale = nullptr) const;
  bool negative(const Scalar* scale = nullptr) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar operator-() const;

  Scalar abs() const;
  /// Float only; Rational input is promoted using the default precision.
  Scalar sqrt() const;
  Scalar pow(unsigned exponent) const;

  /// Raw comparison (no tolerance). Throws on backend mismatch.
  int compare(const Scalar& rhs) const;

  /// Exact equality on Rational; bitwise value equality on Float.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend bool operator<(const Scalar& lhs, const Scalar& rhs) { return lhs.compare(rhs) < 0; }
  friend bool operator>(const Scalar& lhs, const Scalar& rhs) { return lhs.compare(rhs) > 0; }
  friend bool operator<=(const Scalar& lhs, const Scalar& rhs) { return lhs.compare(rhs) <= 0; }
  friend bool operator>=(const Scalar& lhs, const Scalar& rhs) { return lhs.compare(rhs) >= 0; }

  double to_double() const;
  /// "num/den" (or "num" for integers) on Rational, hex float on Float.
  std::string to_string() const;
  /// Decimal rendering for humans; exact fraction on Rational.
  std::string to_display(int digits = 20) const;

 private:
  std::variant<mpq_class, BigFloat> value_;
};

inline Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
inline Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
inline Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
inline Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

Backend common_backend(const Scalar& lhs, const Scalar& rhs);

}  // namespace niep
