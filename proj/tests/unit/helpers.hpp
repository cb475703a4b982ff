#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "niep/matrix.hpp"
#include "niep/polynomial.hpp"
#include "niep/scalar.hpp"
#include "doctest.h"

namespace niep::testing {

inline Scalar Q(const std::string& text) { return Scalar::parse_rational(text); }

/// Polynomial from exact literals, highest degree first.
inline Polynomial P(std::initializer_list<const char*> descending) {
  std::vector<Scalar> c;
  for (const char* s : descending) c.push_back(Q(s));
  return Polynomial::from_descending(std::move(c));
}

inline DenseMatrix M(std::size_t n, std::initializer_list<const char*> row_major) {
  std::vector<Scalar> e;
  for (const char* s : row_major) e.push_back(Q(s));
  return DenseMatrix(n, n, std::move(e));
}

/// (x - rho)(x^2 - 2 a x + m)
inline Polynomial cubic(const Scalar& rho, const Scalar& a, const Scalar& m) {
  Polynomial lin({-rho, rho.one_like()});
  Polynomial quad({m, -(a * a.like(2)), a.one_like()});
  return lin * quad;
}

}  // namespace niep::testing

namespace doctest {
template <>
struct StringMaker<niep::Scalar> {
  static String convert(const niep::Scalar& s) { return s.to_display().c_str(); }
};
template <>
struct StringMaker<niep::Polynomial> {
  static String convert(const niep::Polynomial& p) { return p.to_string().c_str(); }
};
}  // namespace doctest
