#include "niep/scalar.hpp"

#include <regex>

#include "niep/error.hpp"

namespace niep {

Backend Backend::floating(unsigned bits) {
  if (bits < kMinPrecision) {
    throw Error(ErrorKind::UsageError,
                "float precision must be at least " + std::to_string(kMinPrecision) + " bits");
  }
  return {BackendKind::Float, bits};
}

std::string Backend::name() const {
  return is_rational() ? "rational" : "float" + std::to_string(precision_bits);
}

Backend common_backend(const Scalar& lhs, const Scalar& rhs) {
  Backend l = lhs.backend();
  if (l != rhs.backend()) {
    throw Error(ErrorKind::BackendMismatch, l.name() + " vs " + rhs.backend().name());
  }
  return l;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::from_int(long value, const Backend& backend) {
  if (backend.is_rational()) return Scalar(mpq_class(value));
  return Scalar(BigFloat(backend.precision_bits, value));
}

Scalar Scalar::parse_rational(const std::string& text) {
  static const std::regex fraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex decimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  std::smatch match;
  if (std::regex_match(text, match, fraction)) {
    mpz_class num(match[1].str(), 10);
    mpz_class den(match[2].str(), 10);
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }
  if (std::regex_match(text, match, decimal) && (match[2].length() + match[3].length()) > 0) {
    std::string digits = match[2].str() + match[3].str();
    mpz_class num(digits, 10);
    long exponent = -static_cast<long>(match[3].length());
    if (match[4].matched) exponent += std::stol(match[4].str());
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    mpq_class q = exponent < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
    q.canonicalize();
    if (match[1].str() == "-") q = -q;
    return Scalar(q);
  }
  throw Error(ErrorKind::ParseError, "not a rational literal: '" + text + "'");
}

Scalar Scalar::parse(const std::string& text, const Backend& backend) {
  if (backend.is_float() && text.find("0x") != std::string::npos) {
    return Scalar(BigFloat::parse(backend.precision_bits, text));
  }
  return parse_rational(text).to_backend(backend);
}

Scalar Scalar::cos_pi(const mpq_class& t, unsigned precision_bits) {
  mpq_class six_t = t * 6;
  six_t.canonicalize();
  if (six_t.get_den() == 1) {
    // cos(k*pi/6) is rational only when k is a multiple of 2 or 3 (mod 12).
    mpz_class k = six_t.get_num() % 12;
    if (k < 0) k += 12;
    switch (k.get_si()) {
      case 0: return Scalar(1);
      case 2: case 10: return rational(1, 2);
      case 3: case 9: return Scalar(0);
      case 4: case 8: return rational(-1, 2);
      case 6: return Scalar(-1);
      default: break;
    }
  }
  BigFloat angle = BigFloat::pi(precision_bits) * BigFloat(precision_bits, t);
  return Scalar(angle.cos());
}

Backend Scalar::backend() const {
  if (is_rational()) return Backend::rational();
  return {BackendKind::Float, static_cast<unsigned>(std::get<BigFloat>(value_).precision())};
}

const mpq_class& Scalar::as_rational() const {
  if (!is_rational()) throw Error(ErrorKind::WrongBackend, "expected a rational scalar");
  return std::get<mpq_class>(value_);
}

const BigFloat& Scalar::as_float() const {
  if (!is_float()) throw Error(ErrorKind::WrongBackend, "expected a float scalar");
  return std::get<BigFloat>(value_);
}

Scalar Scalar::to_backend(const Backend& target) const {
  if (target == backend()) return *this;
  if (target.is_float()) {
    if (is_rational()) return Scalar(BigFloat(target.precision_bits, as_rational()));
    BigFloat out(target.precision_bits);
    mpfr_set(out.get(), as_float().get(), MPFR_RNDN);
    return Scalar(out);
  }
  // Float -> Rational is exact: every binary float is a dyadic rational.
  mpq_class q;
  mpz_class mantissa;
  mpfr_exp_t exp = mpfr_get_z_2exp(mantissa.get_mpz_t(), as_float().get());
  q = mantissa;
  if (exp >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(exp));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp));
  }
  return Scalar(q);
}

int Scalar::sign() const {
  if (is_rational()) return sgn(as_rational());
  return as_float().sign();
}

bool Scalar::is_exact_zero() const { return sign() == 0; }

Scalar Scalar::epsilon() const {
  if (is_rational()) return Scalar(0);
  long bits = static_cast<long>(as_float().precision());
  return Scalar(BigFloat::exp2(bits, -(bits / 2)));
}

namespace {

// eps * |scale|, or eps when no scale is given.
Scalar band(const Scalar& value, const Scalar* scale) {
  Scalar eps = value.epsilon();
  if (scale != nullptr) eps *= scale->abs();
  return eps;
}

}  // namespace

bool Scalar::is_zero(const Scalar* scale) const {
  if (is_rational()) return is_exact_zero();
  return abs() <= band(*this, scale);
}

bool Scalar::nonnegative(const Scalar* scale) const {
  if (is_rational()) return sign() >= 0;
  return *this >= -band(*this, scale);
}

bool Scalar::nonpositive(const Scalar* scale) const {
  if (is_rational()) return sign() <= 0;
  return *this <= band(*this, scale);
}

bool Scalar::positive(const Scalar* scale) const { return !nonpositive(scale); }
bool Scalar::negative(const Scalar* scale) const { return !nonnegative(scale); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
  common_backend(*this, rhs);
  if (is_rational()) {
    std::get<mpq_class>(value_) += rhs.as_rational();
  } else {
    std::get<BigFloat>(value_) += rhs.as_float();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  common_backend(*this, rhs);
  if (is_rational()) {
    std::get<mpq_class>(value_) -= rhs.as_rational();
  } else {
    std::get<BigFloat>(value_) -= rhs.as_float();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  common_backend(*this, rhs);
  if (is_rational()) {
    std::get<mpq_class>(value_) *= rhs.as_rational();
  } else {
    std::get<BigFloat>(value_) *= rhs.as_float();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  common_backend(*this, rhs);
  if (is_rational()) {
    if (sgn(rhs.as_rational()) == 0) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
    std::get<mpq_class>(value_) /= rhs.as_rational();
  } else {
    std::get<BigFloat>(value_) /= rhs.as_float();
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-as_rational()));
  return Scalar(-as_float());
}

Scalar Scalar::abs() const {
  if (is_rational()) return Scalar(mpq_class(::abs(as_rational())));
  return Scalar(as_float().abs());
}

Scalar Scalar::sqrt() const {
  if (is_rational()) return to_backend(Backend::floating()).sqrt();
  return Scalar(as_float().sqrt());
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = one_like();
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

int Scalar::compare(const Scalar& rhs) const {
  common_backend(*this, rhs);
  if (is_rational()) return cmp(as_rational(), rhs.as_rational());
  return as_float().compare(rhs.as_float());
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.backend() != rhs.backend()) return false;
  return lhs.compare(rhs) == 0;
}

double Scalar::to_double() const {
  if (is_rational()) return as_rational().get_d();
  return as_float().to_double();
}

std::string Scalar::to_string() const {
  if (is_rational()) return as_rational().get_str();
  return as_float().to_hex();
}

std::string Scalar::to_display(int digits) const {
  if (is_rational()) return as_rational().get_str();
  return as_float().to_decimal(digits);
}

}  // namespace niep
