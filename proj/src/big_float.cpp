#include "niep/big_float.hpp"

#include <cstdlib>
#include <memory>
#include <stdexcept>

#include "niep/error.hpp"

namespace niep {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(mpfr_prec_t precision, long value) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(mpfr_prec_t precision, const mpq_class& value) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Leave `other` as a valid minimal-precision zero so its destructor is safe.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::parse(mpfr_prec_t precision, const std::string& text) {
  BigFloat out(precision);
  if (text.empty() || mpfr_set_str(out.value_, text.c_str(), 0, MPFR_RNDN) != 0) {
    throw Error(ErrorKind::ParseError, "not a floating-point literal: '" + text + "'");
  }
  return out;
}

BigFloat BigFloat::pi(mpfr_prec_t precision) {
  BigFloat out(precision);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "float division by zero");
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::abs() const {
  BigFloat out(precision());
  mpfr_abs(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::sqrt() const {
  BigFloat out(precision());
  mpfr_sqrt(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::cos() const {
  BigFloat out(precision());
  mpfr_cos(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::pow(const BigFloat& exponent) const {
  BigFloat out(precision());
  mpfr_pow(out.value_, value_, exponent.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::exp2(mpfr_prec_t precision, long exp) {
  BigFloat out(precision, 1);
  mpfr_mul_2si(out.value_, out.value_, exp, MPFR_RNDN);
  return out;
}

namespace {

std::string take(char* raw) {
  std::unique_ptr<char, decltype(&mpfr_free_str)> guard(raw, &mpfr_free_str);
  return std::string(raw);
}

}  // namespace

std::string BigFloat::to_hex() const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%Ra", value_) < 0) throw std::bad_alloc();
  return take(raw);
}

std::string BigFloat::to_decimal(int digits) const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*Rg", digits, value_) < 0) throw std::bad_alloc();
  return take(raw);
}

}  // namespace niep
