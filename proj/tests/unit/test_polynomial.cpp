#include "doctest.h"
#include "helpers.hpp"
#include "niep/error.hpp"
#include "niep/newton.hpp"
#include "niep/series.hpp"

using namespace niep;
using niep::testing::P;
using niep::testing::Q;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::UsageError;
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("construction trims and keeps zero canonical") {
    Polynomial p({Q("1"), Q("2"), Q("0"), Q("0")});
    CHECK(p.degree() == 1);
    CHECK(Polynomial({Q("0"), Q("0")}).is_zero());
    CHECK(P({"1", "-3", "2"}).to_string() == "x^2 - 3*x + 2");
    CHECK(P({"-1", "0", "1/2"}).to_string() == "-x^2 + 1/2");
  }

  TEST_CASE("poly_divrem examples") {
    auto [q, r] = poly_divrem(P({"1", "0", "-3", "2"}), P({"1", "-1"}));
    CHECK(q == P({"1", "1", "-2"}));
    CHECK(r.is_zero());

    auto [q2, r2] = poly_divrem(P({"1", "0", "0", "0", "0"}), P({"1", "0", "0"}));
    CHECK(q2 == P({"1", "0", "0"}));
    CHECK(r2.is_zero());

    // low-degree dividend: quotient 0, remainder is the dividend
    auto [q3, r3] = poly_divrem(P({"2", "1"}), P({"1", "0", "1"}));
    CHECK(q3.is_zero());
    CHECK(r3 == P({"2", "1"}));

    // non-monic divisor
    auto [q4, r4] = poly_divrem(P({"6", "1", "1"}), P({"2", "1"}));
    CHECK(q4 == P({"3", "-1"}));
    CHECK(r4 == P({"2"}));
  }

  TEST_CASE("poly_divrem errors") {
    CHECK(kind_of([] { poly_divrem(P({"1", "2"}), Polynomial()); }) == ErrorKind::DivisionByZeroPolynomial);
    Polynomial f({Q("1").to_backend(Backend::floating(64)), Q("1").to_backend(Backend::floating(64))});
    CHECK(kind_of([&] { poly_divrem(P({"1", "2"}), f); }) == ErrorKind::BackendMismatch);
  }

  TEST_CASE("poly_shift examples") {
    CHECK(poly_shift(P({"1", "0", "0"}), Q("1")) == P({"1", "2", "1"}));
    Polynomial f = P({"1", "-33/10", "366/100", "-14/10"});
    Polynomial g = poly_shift(f, Q("11/10"));
    CHECK(g.degree() == 3);
    // direct evaluation: 1.331 - 3.993 + 4.026 - 1.4
    CHECK(g[0] == Q("-9/250"));
    CHECK(g[0] == f.evaluate(Q("11/10")));
    CHECK(poly_shift(f, Q("0")) == f);
    CHECK(kind_of([&] { poly_shift(f, Q("1").to_backend(Backend::floating(64))); }) ==
          ErrorKind::BackendMismatch);
  }

  TEST_CASE("poly_reverse examples") {
    CHECK(poly_reverse(P({"1", "2", "3"}), 2) == P({"3", "2", "1"}));
    CHECK(poly_reverse(P({"1", "0", "0", "0"}), 3) == P({"1"}));
    CHECK(poly_reverse(P({"1", "2"}), 3) == P({"2", "1", "0", "0"}));
    CHECK(kind_of([] { poly_reverse(P({"1", "0", "0"}), 1); }) == ErrorKind::DegreeTooSmall);
  }

  TEST_CASE("binomial_power matches repeated multiplication") {
    Polynomial lin({Q("3/7"), Q("1")});
    Polynomial acc = P({"1"});
    for (std::size_t n = 0; n <= 9; ++n) {
      CHECK(binomial_power(Q("3/7"), n) == acc);
      acc = acc * lin;
    }
  }
}

TEST_SUITE("newton") {
  TEST_CASE("coefficients to power sums") {
    PowerSums s = newton_coeffs_to_powersums(P({"1", "0", "-1"}), 4);
    REQUIRE(s.size() == 4);
    CHECK(s.s(1) == Q("0"));
    CHECK(s.s(2) == Q("2"));
    CHECK(s.s(3) == Q("0"));
    CHECK(s.s(4) == Q("2"));

    PowerSums t = newton_coeffs_to_powersums(P({"1", "-33/10", "366/100", "-14/10"}), 3);
    CHECK(t.s(1) == Q("33/10"));
    CHECK(t.s(2) == Q("357/100"));
    CHECK(t.s(3) == Q("3903/1000"));

    PowerSums z = newton_coeffs_to_powersums(Polynomial::monomial(5, Backend::rational()), 7);
    for (const Scalar& v : z.values) CHECK(v.is_exact_zero());

    CHECK(kind_of([] { newton_coeffs_to_powersums(P({"2", "1"}), 2); }) == ErrorKind::NotMonic);
  }

  TEST_CASE("power sums to coefficients") {
    CHECK(newton_powersums_to_coeffs({{Q("0"), Q("2")}}) == P({"1", "0", "-1"}));
    CHECK(newton_powersums_to_coeffs({{Q("0")}}) == P({"1", "0"}));
  }

  TEST_CASE("shifted (5, 2+-3i) + 3 zeros sextic from its power sums") {
    // Roots 5, 2 +- 3i, 0, 0, 0 shifted by -3/2; power sums by direct expansion
    // of the shifted root list: s_k = (7/2)^k + 2 Re((1/2 + 3i)^k) + 3 (-3/2)^k.
    Scalar rho = Q("7/2");
    Scalar alpha = Q("-3/2");
    // t_k for the conjugate pair with a = 1/2, m = 1/4 + 9
    Scalar a = Q("1/2");
    Scalar m = Q("37/4");
    std::vector<Scalar> t{Q("2"), a * Q("2")};
    PowerSums s;
    for (std::size_t k = 1; k <= 6; ++k) {
      if (k >= 2) t.push_back(a * Q("2") * t[k - 1] - m * t[k - 2]);
      s.values.push_back(rho.pow(k) + t[k] + Q("3") * alpha.pow(k));
    }
    CHECK(s.s(1) == Q("0"));
    CHECK(newton_powersums_to_coeffs(s) == P({"1", "0", "-3/4", "-2", "-1197/16", "-351/2", "-6993/64"}));
  }
}

TEST_SUITE("series") {
  TEST_CASE("series_nth_root examples") {
    TruncatedSeries sq({Q("1"), Q("-2"), Q("1")}, 2);
    TruncatedSeries root = series_nth_root(sq, 2);
    CHECK(root == TruncatedSeries({Q("1"), Q("-1"), Q("0")}, 2));

    TruncatedSeries ft({Q("1"), Q("-33/10"), Q("366/100"), Q("-14/10")}, 4);
    TruncatedSeries g = series_nth_root(ft, 4);
    CHECK(g[1] == -Q("33/40"));
    CHECK(g[2] == -Q("339/3200"));
    CHECK(g[3] == -Q("6487/128000"));
    CHECK(g[4] == -Q("171081/4096000"));
    CHECK(g.pow(4) == ft);

    CHECK(series_nth_root(ft, 1) == ft);
  }

  TEST_CASE("series_nth_root rejects a constant term other than 1") {
    TruncatedSeries bad({Q("2"), Q("1")}, 3);
    CHECK(kind_of([&] { series_nth_root(bad, 3); }) == ErrorKind::BadConstantTerm);
  }

  TEST_CASE("float series root agrees with the rational one") {
    TruncatedSeries ft({Q("1"), Q("-33/10"), Q("366/100"), Q("-14/10")}, 6);
    Backend fb = Backend::floating(256);
    std::vector<Scalar> fc;
    for (const Scalar& c : ft.coeffs()) fc.push_back(c.to_backend(fb));
    TruncatedSeries gf = series_nth_root(TruncatedSeries(fc, 6), 4);
    TruncatedSeries gq = series_nth_root(ft, 4);
    for (std::size_t i = 0; i <= 6; ++i) {
      Scalar diff = gf[i] - gq[i].to_backend(fb);
      CHECK(diff.is_zero());
    }
  }
}
