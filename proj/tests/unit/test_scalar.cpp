#include "doctest.h"
#include "helpers.hpp"
#include "niep/error.hpp"

using namespace niep;
using niep::testing::Q;

TEST_SUITE("scalar") {
  TEST_CASE("decimal and fraction literals parse exactly") {
    CHECK(Q("7/5") == Scalar::rational(7, 5));
    CHECK(Q("1.4") == Scalar::rational(7, 5));
    CHECK(Q("3.66") == Scalar::rational(183, 50));
    CHECK(Q("-0.95") == Scalar::rational(-19, 20));
    CHECK(Q("3.66e-2") == Scalar::rational(183, 5000));
    CHECK(Q("12e2") == Scalar(1200));
    CHECK(Q(" 14/10 ") == Scalar::rational(7, 5));
    CHECK(Q(".5") == Scalar::rational(1, 2));
    CHECK(Q("010/08") == Scalar::rational(5, 4));
    CHECK_THROWS_AS(Q("1/0"), Error);
    CHECK_THROWS_AS(Q("abc"), Error);
    CHECK_THROWS_AS(Q(""), Error);
    CHECK_THROWS_AS(Q("1.2.3"), Error);
  }

  TEST_CASE("rational arithmetic stays reduced and exact") {
    Scalar x = Q("11/40") + Q("71/3520");
    CHECK(x.as_rational().get_den() == 3520);
    CHECK(x == Q("1039/3520"));
    CHECK((Q("1/3") * Q("3")) == Scalar(1));
    CHECK((Q("-2/4")).as_rational().get_den() == 2);
    CHECK_THROWS_AS(Q("1") / Q("0"), Error);
  }

  TEST_CASE("mixed backends are rejected") {
    Scalar r = Q("1/2");
    Scalar f = r.to_backend(Backend::floating(128));
    try {
      (void)(r + f);
      FAIL("expected BackendMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BackendMismatch);
    }
    Scalar g = r.to_backend(Backend::floating(256));
    CHECK_THROWS_AS((void)(f * g), Error);
    CHECK_THROWS_AS(Backend::floating(32), Error);
  }

  TEST_CASE("float tolerance band is 2^-(P/2)") {
    Backend fb = Backend::floating(128);
    Scalar eps = Scalar::from_int(1, fb).epsilon();
    CHECK(eps.as_float().compare(BigFloat::exp2(128, -64)) == 0);
    Scalar tiny_neg = -(eps / eps.like(2));
    CHECK(tiny_neg.nonnegative());
    CHECK(tiny_neg.is_zero());
    CHECK_FALSE(tiny_neg.negative());
    Scalar clear_neg = -(eps * eps.like(2));
    CHECK(clear_neg.negative());
    // scale shrinks the band
    Scalar scale = eps;
    CHECK(tiny_neg.negative(&scale));
    // rational is exact
    CHECK(Q("-1/1000000000000000000000000").negative());
  }

  TEST_CASE("float <-> rational conversion round-trips dyadics") {
    Scalar r = Q("3/8");
    Scalar f = r.to_backend(Backend::floating(64));
    CHECK(f.to_backend(Backend::rational()) == r);
    CHECK(f.to_string() == "0x6p-4");
    Scalar parsed = Scalar::parse(f.to_string(), Backend::floating(64));
    CHECK(parsed == f);
  }

  TEST_CASE("cos of rational multiples of pi") {
    CHECK(Scalar::cos_pi(mpq_class(1, 3), 256) == Q("1/2"));
    CHECK(Scalar::cos_pi(mpq_class(1, 2), 256) == Scalar(0));
    CHECK(Scalar::cos_pi(mpq_class(2, 3), 256) == Q("-1/2"));
    CHECK(Scalar::cos_pi(mpq_class(7, 3), 256) == Q("1/2"));
    CHECK(Scalar::cos_pi(mpq_class(-1, 1), 256) == Scalar(-1));
    Scalar c = Scalar::cos_pi(mpq_class(188, 10000), 256);
    REQUIRE(c.is_float());
    CHECK(c.as_float().to_decimal(20) == "0.99825635046493254724");
  }

  TEST_CASE("integer powers") {
    CHECK(Q("3/2").pow(3) == Q("27/8"));
    CHECK(Q("5").pow(0) == Scalar(1));
  }
}
