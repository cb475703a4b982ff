#include <cmath>
#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "niep/conditions.hpp"
#include "niep/laffey.hpp"
#include "niep/multiblock.hpp"
#include "niep/newton.hpp"
#include "niep/series.hpp"
#include "niep/shifted_companion.hpp"

using namespace niep;

namespace {

constexpr int kCases = 100;

using niep::testing::Gen;

Scalar power_sum_of(const std::vector<Scalar>& roots, std::size_t k) {
  Scalar s(0);
  for (const Scalar& r : roots) s += r.pow(static_cast<unsigned>(k));
  return s;
}

}  // namespace

TEST_SUITE("property.newton") {
  TEST_CASE("coefficients -> power sums -> coefficients") {
    Gen g(101);
    for (int i = 0; i < kCases; ++i) {
      Polynomial p = g.monic(static_cast<std::size_t>(g.integer(1, 12)));
      CHECK(newton_powersums_to_coeffs(newton_coeffs_to_powersums(p, p.degree())) == p);
    }
  }

  TEST_CASE("power sums of explicit rational roots") {
    Gen g(102);
    for (int i = 0; i < kCases; ++i) {
      std::vector<Scalar> roots;
      Polynomial p = Polynomial::constant(Scalar(1));
      for (long j = g.integer(1, 8); j > 0; --j) {
        roots.push_back(g.rational(5, 4));
        p = p * Polynomial({-roots.back(), Scalar(1)});
      }
      PowerSums s = newton_coeffs_to_powersums(p, 12);
      for (std::size_t k = 1; k <= 12; ++k) CHECK(s.s(k) == power_sum_of(roots, k));
    }
  }

  TEST_CASE("spectrum power sums agree with Newton on the cubic") {
    Gen g(103);
    for (int i = 0; i < kCases; ++i) {
      Spectrum3 s = g.spectrum();
      const std::size_t k = static_cast<std::size_t>(g.integer(1, 50));
      CHECK(power_sums(s, k).values == newton_coeffs_to_powersums(s.cubic(), k).values);
    }
  }
}

TEST_SUITE("property.polynomial") {
  TEST_CASE("division reassembles") {
    Gen g(201);
    for (int i = 0; i < kCases; ++i) {
      Polynomial a = g.any(static_cast<std::size_t>(g.integer(0, 20)));
      Polynomial b = g.any(static_cast<std::size_t>(g.integer(0, 10)));
      DivRem d = poly_divrem(a, b);
      CHECK(d.quotient * b + d.remainder == a);
      CHECK((d.remainder.is_zero() || d.remainder.degree() < b.degree() || b.degree() == 0));
    }
  }

  TEST_CASE("shifting by c then -c is the identity") {
    Gen g(202);
    for (int i = 0; i < kCases; ++i) {
      Polynomial p = g.any(static_cast<std::size_t>(g.integer(0, 15)));
      Scalar c = g.rational();
      Polynomial q = poly_shift(p, c);
      CHECK(poly_shift(q, -c) == p);
      Scalar y = g.rational();
      CHECK(q.evaluate(y) == p.evaluate(y + c));
    }
  }

  TEST_CASE("series root raised to the N-th power") {
    Gen g(203);
    for (int i = 0; i < kCases; ++i) {
      const std::size_t order = static_cast<std::size_t>(g.integer(1, 10));
      std::vector<Scalar> c{Scalar(1)};
      for (std::size_t j = 1; j <= order; ++j) c.push_back(g.rational(5, 6));
      TruncatedSeries f(c, order);
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 7));
      CHECK(series_nth_root(f, n).pow(n) == f);
    }
  }

  TEST_CASE("companion charpoly, degrees 1..16") {
    Gen g(204);
    for (int i = 0; i < kCases; ++i) {
      Polynomial p = g.monic(static_cast<std::size_t>(1 + i % 16));
      DenseMatrix c = DenseMatrix::companion(p);
      CHECK(charpoly(c) == p);
      CHECK(charpoly_hessenberg(c) == p);
    }
  }
}

TEST_SUITE("property.conditions") {
  TEST_CASE("3x3 companion test is scale invariant") {
    Gen g(301);
    for (int i = 0; i < kCases; ++i) {
      Spectrum3 s = g.spectrum();
      Scalar k = Scalar::rational(g.integer(1, 40), g.integer(1, 40));
      Spectrum3 t = Spectrum3::make(s.rho() * k, s.a() * k, s.modsq() * k * k);
      CHECK(check_n3_companion(s).holds == check_n3_companion(t).holds);
      CHECK(*check_n3_companion(t).witness == *check_n3_companion(s).witness * k * k);
    }
  }

  TEST_CASE("JLL is monotone in the dimension") {
    Gen g(302);
    JllScan scan{4, 4};
    for (int i = 0; i < kCases; ++i) {
      Spectrum3 s = g.spectrum();
      bool prev = false;
      for (std::size_t n = 3; n <= 40; n += 1 + static_cast<std::size_t>(g.integer(0, 4))) {
        bool now = all_hold(check_jll(s, n, scan));
        if (prev) CHECK(now);
        prev = now;
      }
    }
  }

  TEST_CASE("Boyle-Handelman scan covers one period") {
    Gen g(303);
    for (int i = 0; i < kCases; ++i) {
      const long l = g.integer(2, 24);
      Scalar rho = Scalar::rational(g.integer(100, 200), 100);
      BhReport r = bh_check_rational_angle(rho, l);
      bool longer = true;
      for (long k = 1; k <= 6 * l; ++k) {
        double v = std::pow(rho.to_double(), static_cast<double>(k)) + 2 * std::cos(k * M_PI / static_cast<double>(l));
        if (v <= 1e-12) longer = false;
      }
      CHECK(r.report.holds == longer);
    }
  }
}

TEST_SUITE("property.methods") {
  TEST_CASE("one zero: shifted companion iff rho >= 2a") {
    Gen g(401);
    int tested = 0;
    while (tested < kCases) {
      Spectrum3 s = g.spectrum();
      PowerSums p = power_sums(s, 3);
      if (p.s(1).negative() || (p.s(2) * Scalar(4) - p.s(1) * p.s(1)).negative()) continue;
      ++tested;
      ShiftedCompanionCandidate c = try_shifted_companion(s, 1);
      CHECK(c.feasible == !(s.rho() - Scalar(2) * s.a()).negative());
      // s_3 of the alpha-shifted list
      Scalar want = Scalar::rational(3, 8) * (s.rho() - Scalar(2) * s.a()) *
                    (s.rho() * s.rho() + Scalar(4) * s.imag_sq());
      CHECK(-c.shifted_poly[1] * Scalar(3) == want);
    }
  }

  TEST_CASE("P4 against the closed form") {
    Gen g(402);
    for (int i = 0; i < 20; ++i) {
      Spectrum3 s = g.spectrum();
      for (std::size_t n = 4; n <= 30; ++n) {
        P4Diagnostic d = p4_diagnostic(s, n);
        Scalar q = d.s4 - d.s2 * d.s2 / Scalar(2);
        CHECK(d.p4 == -q / Scalar(4));
        CHECK(d.closed_form == q);
      }
    }
  }

  TEST_CASE("a <= 0: shifted companion matches the closed form") {
    Gen g(403);
    int tested = 0;
    while (tested < 30) {
      Spectrum3 s = g.spectrum();
      if (s.a().positive()) continue;
      ++tested;
      std::optional<std::size_t> want = minimal_zeros_nonpositive_a(s);
      SearchOutcome o = find_min_shifted_companion(s, 200);
      CHECK(o.found() == want.has_value());
      if (want && o.found()) CHECK(o.result->zeros_added == *want);
    }
  }

  TEST_CASE("Laffey candidates reproduce traces") {
    Gen g(404);
    for (int i = 0; i < kCases; ++i) {
      Spectrum3 s = g.spectrum();
      const std::size_t m = static_cast<std::size_t>(g.integer(3, 14));
      LaffeyCandidate c = build_laffey_candidate(s, m);
      CHECK(c.x.s(1) == power_sums(s, 1).s(1) / Scalar(static_cast<long>(m)));
      if (!c.feasible) continue;
      DenseMatrix x = assemble_Xm(c);
      CHECK(charpoly_hessenberg(x) == s.with_zeros(m - 3));
      PowerSums want = power_sums(s, 3);
      DenseMatrix p = x;
      for (std::size_t k = 1; k <= 3; ++k) {
        CHECK(p.trace() == want.s(k));
        p = p * x;
      }
    }
  }

  TEST_CASE("division ladder reassembles") {
    Gen g(405);
    for (int i = 0; i < kCases; ++i) {
      Spectrum3 s = g.spectrum();
      const std::size_t n = static_cast<std::size_t>(g.integer(2, 6));
      SeriesRoot r = series_l_coefficients(s, n);
      CHECK(r.l[0] == power_sums(s, 1).s(1) / Scalar(static_cast<long>(n)));
      Polynomial e = block_polynomial(r.l, n);
      Ladder ladder = division_ladder(s, e, n);
      CHECK(reassemble(e, ladder) == s.with_zeros(n * n - 3));
      CHECK(ladder.final_quotient == e);
      for (const Polynomial& rem : ladder.remainders) CHECK((rem.is_zero() || rem.degree() < n));
      MultiBlockLayout layout = build_multiblock_layout(s, n);
      if (layout.feasible) CHECK(charpoly_hessenberg(assemble_multiblock(layout)) == s.with_zeros(n * n - 3));
    }
  }
}
