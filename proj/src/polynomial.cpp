#include "niep/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "niep/error.hpp"

namespace niep {

Polynomial::Polynomial() : coeffs_{Scalar(0)} {}

Polynomial::Polynomial(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
  Backend backend = coeffs_.front().backend();
  for (const Scalar& c : coeffs_) {
    if (c.backend() != backend) {
      throw Error(ErrorKind::BackendMismatch, "polynomial coefficients on mixed backends");
    }
  }
  trim();
}

Polynomial Polynomial::zero(const Backend& backend) {
  return Polynomial({Scalar::from_int(0, backend)});
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t n, const Backend& backend) {
  std::vector<Scalar> c(n + 1, Scalar::from_int(0, backend));
  c[n] = Scalar::from_int(1, backend);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_descending(std::vector<Scalar> descending) {
  std::reverse(descending.begin(), descending.end());
  return Polynomial(std::move(descending));
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back().is_exact_zero()) coeffs_.pop_back();
}

Scalar Polynomial::operator[](std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return coeffs_.front().zero_like();
}

Scalar Polynomial::evaluate(const Scalar& at) const {
  Scalar acc = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    acc *= at;
    acc += coeffs_[i];
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  common_backend(coeffs_.front(), rhs.coeffs_.front());
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), coeffs_.front().zero_like());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  common_backend(coeffs_.front(), rhs.coeffs_.front());
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), coeffs_.front().zero_like());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (const Scalar& v : coeffs_) c.push_back(-v);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Scalar& k) const {
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (const Scalar& v : coeffs_) c.push_back(v * k);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::shifted_up(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<Scalar> c(k, coeffs_.front().zero_like());
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  Backend backend = common_backend(lhs.coeffs_.front(), rhs.coeffs_.front());
  std::vector<Scalar> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Scalar::from_int(0, backend));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_exact_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.coeffs_.size() != rhs.coeffs_.size()) return false;
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (!(lhs.coeffs_[i] == rhs.coeffs_[i])) return false;
  }
  return true;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Scalar& c = coeffs_[i];
    if (c.is_exact_zero()) continue;
    Scalar mag = c.abs();
    bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit = mag.compare(mag.one_like()) == 0;
    if (!unit || i == 0) {
      os << mag.to_display();
      if (i > 0) os << "*";
    }
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

DivRem poly_divrem(const Polynomial& dividend, const Polynomial& divisor) {
  Backend backend = common_backend(dividend.coeffs().front(), divisor.coeffs().front());
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZeroPolynomial, "divisor is the zero polynomial");

  const std::size_t dn = divisor.degree();
  if (dividend.degree() < dn || dividend.is_zero()) return {Polynomial::zero(backend), dividend};

  std::vector<Scalar> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  std::vector<Scalar> quot(dividend.degree() - dn + 1, Scalar::from_int(0, backend));
  const Scalar& lead = divisor.leading();
  const bool monic = divisor.is_monic();
  auto dc = divisor.coeffs();

  for (std::size_t k = quot.size(); k-- > 0;) {
    Scalar factor = monic ? rem[k + dn] : rem[k + dn] / lead;
    if (factor.is_exact_zero()) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= factor * dc[j];
    rem[k + dn] = Scalar::from_int(0, backend);
    quot[k] = std::move(factor);
  }
  rem.resize(std::max<std::size_t>(dn, 1), Scalar::from_int(0, backend));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_shift(const Polynomial& p, const Scalar& c) {
  common_backend(p.coeffs().front(), c);
  std::vector<Scalar> a(p.coeffs().begin(), p.coeffs().end());
  const std::size_t n = a.size() - 1;
  if (c.is_exact_zero() || n == 0) return p;
  // Repeated synthetic division by (x - c); O(n^2) scalar operations.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n; j-- > i;) a[j] += c * a[j + 1];
  }
  return Polynomial(std::move(a));
}

Polynomial poly_reverse(const Polynomial& p, std::size_t n) {
  if (n < p.degree()) {
    throw Error(ErrorKind::DegreeTooSmall,
                "reversal length " + std::to_string(n) + " below degree " + std::to_string(p.degree()));
  }
  std::vector<Scalar> out(n + 1, p.coeffs().front().zero_like());
  for (std::size_t i = 0; i <= p.degree(); ++i) out[n - i] = p[i];
  return Polynomial(std::move(out));
}

Polynomial binomial_power(const Scalar& c, std::size_t n) {
  // coefficient of x^k is C(n, k) c^(n-k)
  std::vector<Scalar> out(n + 1, c.zero_like());
  Scalar power = c.one_like();
  mpz_class binom = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    // j = n - k
    std::size_t k = n - j;
    out[k] = power * Scalar(mpq_class(binom)).to_backend(c.backend());
    power *= c;
    binom = binom * static_cast<unsigned long>(n - j) / static_cast<unsigned long>(j + 1);
  }
  return Polynomial(std::move(out));
}

}  // namespace niep
