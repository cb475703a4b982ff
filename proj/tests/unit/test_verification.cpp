#include "doctest.h"
#include "helpers.hpp"
#include "niep/error.hpp"
#include "niep/compare.hpp"
#include "niep/verification.hpp"

using namespace niep;
using niep::testing::M;
using niep::testing::P;
using niep::testing::Q;

TEST_SUITE("verification") {
  TEST_CASE("explicit target with four nonzero eigenvalues") {
    DenseMatrix a = M(4, {"8/3", "1", "0", "0",        //
                          "0", "8/3", "1", "0",        //
                          "52/27", "1/3", "8/3", "0",  //
                          "0", "0", "0", "3"});
    Certificate c = verify_realization(a, P({"1", "-4"}) * P({"1", "-3"}) * P({"1", "-4", "5"}));
    CHECK(c.holds());
    CHECK_FALSE(c.residual);
    CHECK(*c.min_entry == Q("0"));
  }

  TEST_CASE("(12, 9+-i) by a 3x3 matrix") {
    DenseMatrix a = M(3, {"10", "1", "0", "0", "10", "1", "4", "2", "10"});
    Spectrum3 s = Spectrum3::make(Q("12"), Q("9"), Q("82"));
    CHECK(verify_realization(a, s).holds());
    CHECK(verify_realization(a, s.cubic()).holds());
    CHECK_FALSE(verify_realization(a, Spectrum3::make(Q("12"), Q("9"), Q("83"))).charpoly_match);
  }

  TEST_CASE("a negative entry fails regardless of the charpoly") {
    DenseMatrix a = M(3, {"10", "1", "0", "0", "10", "1", "4", "2", "10"});
    DenseMatrix b = a;
    b(2, 0) = Q("-1");
    b(1, 0) = Q("0");
    Spectrum3 s = Spectrum3::make(Q("12"), Q("9"), Q("82"));
    CHECK_FALSE(verify_realization(b, s).nonnegative);
    // a similarity that keeps the spectrum but introduces a sign
    DenseMatrix c = DenseMatrix::companion(s.cubic());
    CHECK(verify_realization(c, s).charpoly_match);
    CHECK_FALSE(verify_realization(c, s).nonnegative);
  }

  TEST_CASE("dimension checks") {
    Spectrum3 s = Spectrum3::make(Q("12"), Q("9"), Q("82"));
    CHECK_THROWS_AS(verify_realization(DenseMatrix::identity(2, Backend::rational()), s), Error);
    CHECK_THROWS_AS(verify_realization(DenseMatrix(2, 3, Backend::rational()), s), Error);
    CHECK_THROWS_AS(certify(Method::External, DenseMatrix::identity(3, Backend::rational()), s), std::logic_error);
  }

  TEST_CASE("numeric check on the printed 4x4 matrix") {
    Backend f = Backend::floating(256);
    auto F = [&](const char* t) { return Scalar::parse(t, f); };
    std::vector<Scalar> e(16, Scalar::from_int(0, f));
    e[0] = F("1.013005334");
    e[1] = F("1");
    e[5] = F("1.041605274");
    e[6] = F("1");
    e[10] = F("1.041605274");
    e[11] = F("1");
    e[12] = F("0.000326227");
    e[15] = F("0.000296825");
    DenseMatrix a(4, 4, e);
    Spectrum3 s = Spectrum3::from_angle(Q("11/10"), mpq_class(188, 10000), 256);
    CHECK(numeric_eigen_check(a, s, F("1e-6")));
    CHECK_FALSE(numeric_eigen_check(a, s, F("1e-12")));
    CHECK_THROWS_AS(numeric_eigen_check(a.to_backend(Backend::rational()), s, F("1e-6")), Error);
  }

  TEST_CASE("numeric check rejects a mismatched matrix") {
    Backend f = Backend::floating(256);
    Spectrum3 s = Spectrum3::from_angle(Q("1"), mpq_class(1, 3), 256);
    CHECK_FALSE(numeric_eigen_check(DenseMatrix::identity(3, f), s, Scalar::parse("1e-6", f)));
  }

  TEST_CASE("exact realization converted to floats passes tightly") {
    DenseMatrix a = M(3, {"10", "1", "0", "0", "10", "1", "4", "2", "10"});
    Backend f = Backend::floating(256);
    Spectrum3 s = Spectrum3::make(Q("12"), Q("9"), Q("82"));
    CHECK(numeric_eigen_check(a.to_backend(f), s, Scalar::parse("1e-20", f)));
    Certificate c = verify_realization(a.to_backend(f), s);
    CHECK(c.holds());
    CHECK(c.approximate());
  }
}

TEST_SUITE("compare") {
  TEST_CASE("cos theta = 0.95") {
    MethodCaps caps;
    caps.shifted_companion_zeros = 60;
    caps.laffey_dim = 40;
    caps.multiblock_n = 8;
    ComparisonTable t = compare_methods(Spectrum3::make(Q("7/5"), Q("19/20"), Q("1")), caps);
    CHECK_FALSE(t.shifted_companion.found());
    CHECK(t.shifted_companion.cap == 60);
    REQUIRE(t.laffey.found());
    CHECK(t.laffey.result->zeros_added == 9);
    REQUIRE(t.multiblock.found());
    CHECK(t.multiblock.result->zeros_added == 13);
    REQUIRE(t.jll_min_dim);
    CHECK(all_hold(check_jll(t.sigma, *t.jll_min_dim)));
  }

  TEST_CASE("(5, 2+-3i) is best possible by the shifted companion") {
    MethodCaps caps;
    caps.laffey_dim = 20;
    caps.multiblock_n = 8;
    ComparisonTable t = compare_methods(Spectrum3::make(Q("5"), Q("2"), Q("13")), caps);
    REQUIRE(t.shifted_companion.found());
    CHECK(t.shifted_companion.result->zeros_added == 3);
    CHECK(t.jll_min_dim == std::optional<std::size_t>(6));
    CHECK_FALSE(all_hold(check_jll(t.sigma, 5)));
  }

  TEST_CASE("deterministic") {
    MethodCaps caps;
    caps.shifted_companion_zeros = 10;
    caps.laffey_dim = 15;
    caps.multiblock_n = 5;
    Spectrum3 s = Spectrum3::make(Q("3"), Q("-1"), Q("2"));
    ComparisonTable a = compare_methods(s, caps);
    ComparisonTable b = compare_methods(s, caps);
    REQUIRE(a.multiblock.found());
    CHECK(a.multiblock.result->matrix == b.multiblock.result->matrix);
    CHECK(a.laffey.result->matrix == b.laffey.result->matrix);
    CHECK(a.conditions.size() == b.conditions.size());
  }

  TEST_CASE("Perron violation is rejected at input") {
    CHECK_THROWS_AS(Spectrum3::make(Q("1"), Q("1/2"), Q("2")), Error);
  }
}
