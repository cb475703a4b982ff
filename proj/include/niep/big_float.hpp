#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace niep {

/// Owning MPFR value with a fixed precision. All operations round to nearest
/// and produce a result at the precision of the left operand.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(mpfr_prec_t precision, long value);
  BigFloat(mpfr_prec_t precision, const mpq_class& value);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  /// Accepts anything mpfr_set_str understands with base 0, so both decimal
  /// ("1.013005334") and hexadecimal ("0x1.8p+0") literals work.
  static BigFloat parse(mpfr_prec_t precision, const std::string& text);
  static BigFloat pi(mpfr_prec_t precision);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat operator-() const;

  BigFloat abs() const;
  BigFloat sqrt() const;
  BigFloat cos() const;
  BigFloat pow(const BigFloat& exponent) const;
  /// 2^exp at the given precision.
  static BigFloat exp2(mpfr_prec_t precision, long exp);

  int compare(const BigFloat& rhs) const { return mpfr_cmp(value_, rhs.value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// C99 hexadecimal float rendering ("0x1.8p+0"); round-trips exactly.
  std::string to_hex() const;
  /// Decimal rendering with the given number of significant digits.
  std::string to_decimal(int digits) const;

 private:
  mpfr_t value_;
};

inline BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
inline BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
inline BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
inline BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

}  // namespace niep
