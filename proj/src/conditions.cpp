#include "niep/conditions.hpp"

#include <algorithm>

#include "niep/error.hpp"

namespace niep {

namespace {

std::string jll_name(std::size_t k, std::size_t m, std::size_t n) {
  return "jll(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
}

const char* kPerronNote = "rho = |lambda_2|: outside the strict Perron hypothesis of Boyle-Handelman";

// Rational stays rational; anything meeting a Float moves to that Float.
Scalar lift(const Scalar& x, const Backend& backend) {
  if (backend.is_float() && x.is_rational()) return x.to_backend(backend);
  return x;
}

Backend join(const Backend& x, const Backend& y) {
  if (x.is_float()) return x;
  return y;
}

}  // namespace

std::vector<ConditionReport> check_jll(const Spectrum3& sigma, std::size_t n, JllScan scan) {
  if (n < 3) throw Error(ErrorKind::BadDimension, "JLL dimension must be at least 3");
  PowerSums s = power_sums(sigma, std::max<std::size_t>(1, scan.k_max * scan.m_max));
  const std::string perron_note = sigma.strict_perron() ? "" : kPerronNote;

  std::vector<ConditionReport> out;
  for (std::size_t k = 1; k <= scan.k_max; ++k) {
    ConditionReport r;
    r.name = "trace(k=" + std::to_string(k) + ")";
    r.witness = s.s(k);
    r.holds = s.s(k).nonnegative();
    r.witness_index = static_cast<long>(k);
    r.notes = perron_note;
    out.push_back(std::move(r));
  }
  const Scalar dim = sigma.rho().like(static_cast<long>(n));
  for (std::size_t k = 1; k <= scan.k_max; ++k) {
    for (std::size_t m = 2; m <= scan.m_max; ++m) {
      Scalar lhs = dim.pow(static_cast<unsigned>(m - 1)) * s.s(k * m);
      Scalar rhs = s.s(k).pow(static_cast<unsigned>(m));
      ConditionReport r;
      r.name = jll_name(k, m, n);
      r.witness = lhs - rhs;
      r.holds = r.witness->nonnegative(&rhs);
      r.witness_index = static_cast<long>(k);
      r.notes = perron_note;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::optional<std::size_t> jll_minimal_dimension(const Spectrum3& sigma, JllScan scan, std::size_t cap) {
  // Passing is monotone in n: a failing trace condition fails for every n, and
  // with all s_k >= 0 a negative s_{km} fails for every n as well. So gallop
  // then bisect, reusing check_jll to keep one tolerance rule.
  auto passes = [&](std::size_t n) { return all_hold(check_jll(sigma, n, scan)); };
  if (cap < 3 || !passes(cap)) return std::nullopt;
  std::size_t lo = 3;
  std::size_t hi = 3;
  while (hi < cap && !passes(hi)) {
    lo = hi + 1;
    hi = std::min(cap, hi * 2);
  }
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (passes(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return hi;
}

ConditionReport check_n3_companion(const Spectrum3& sigma) {
  ConditionReport r;
  r.name = "n3_companion(rho >= a + b*sqrt(3))";
  Scalar lead = sigma.rho() - sigma.a();
  Scalar rhs = sigma.imag_sq() * lead.like(3);
  if (lead.negative()) {
    r.holds = false;
    r.witness = lead;
    r.notes = "rho - a < 0";
    return r;
  }
  Scalar margin = lead * lead - rhs;
  r.witness = margin;
  r.holds = margin.nonnegative(&rhs);
  r.notes = "(rho - a)^2 - 3 b^2";
  return r;
}

ConditionReport check_rho_ge_2a(const Spectrum3& sigma) {
  ConditionReport r;
  r.name = "rho_ge_2a";
  Scalar margin = sigma.rho() - sigma.a() * sigma.a().like(2);
  r.witness = margin;
  r.holds = margin.nonnegative();
  r.notes = margin.is_zero() ? "boundary: the shifted s_3 = (3/8)(rho - 2a)(rho^2 + 4b^2) vanishes"
                             : "rho - 2a";
  if (!sigma.strict_perron()) r.notes += std::string("; ") + kPerronNote;
  return r;
}

std::optional<std::size_t> minimal_zeros_nonpositive_a(const Spectrum3& sigma) {
  if (sigma.a().positive()) {
    throw Error(ErrorKind::NotApplicable, "minimal-zero formula requires a <= 0, got " + sigma.a().to_display());
  }
  PowerSums s = power_sums(sigma, 2);
  if (s.s(1).negative()) return std::nullopt;
  Scalar s1_sq = s.s(1) * s.s(1);
  if (!s.s(2).positive()) {
    if (s1_sq.is_zero()) return 0;
    return std::nullopt;
  }
  // least N with (N + 3) s_2 >= s_1^2; start from the floor estimate and step.
  std::size_t n = 0;
  if (s1_sq.is_rational()) {
    mpq_class ratio = s1_sq.as_rational() / s.s(2).as_rational();
    mpz_class ceil_ratio;
    mpz_cdiv_q(ceil_ratio.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    if (ceil_ratio > 3) n = static_cast<std::size_t>(mpz_class(ceil_ratio - 3).get_ui());
  }
  while (n > 0 && (s.s(2) * s.s(2).like(static_cast<long>(n + 2)) - s1_sq).nonnegative(&s1_sq)) --n;
  while (!(s.s(2) * s.s(2).like(static_cast<long>(n + 3)) - s1_sq).nonnegative(&s1_sq)) ++n;
  return n;
}

BhReport bh_check_rational_angle(const Scalar& rho, long l) {
  if (l < 2) throw Error(ErrorKind::BadAngle, "theta = pi/l needs l >= 2, got " + std::to_string(l));
  const unsigned bits = rho.is_float() ? rho.backend().precision_bits : Backend::kDefaultPrecision;
  const Backend float_backend = Backend::floating(bits);

  BhReport out;
  ConditionReport& r = out.report;
  r.name = "boyle_handelman(theta=pi/" + std::to_string(l) + ")";
  r.holds = true;
  std::vector<Scalar> cosines;
  Backend backend = rho.backend();
  for (long k = 1; k <= 2 * l; ++k) {
    cosines.push_back(Scalar::cos_pi(mpq_class(k, l), bits));
    backend = join(backend, cosines.back().backend());
  }
  const Scalar r0 = lift(rho, backend);
  std::optional<Scalar> worst;
  for (long k = 1; k <= 2 * l; ++k) {
    Scalar c = lift(cosines[static_cast<std::size_t>(k - 1)], backend);
    Scalar value = r0.pow(static_cast<unsigned>(k)) + c * c.like(2);
    if (!worst || value < *worst) worst = value;
    if (!value.positive() && r.holds) {
      r.holds = false;
      r.witness_index = k;
      r.witness = value;
    }
  }
  if (r.holds) r.witness = worst;
  r.notes = "scanned k = 1.." + std::to_string(2 * l) + " (one period of cos(k pi/l))";

  Scalar rho0 = Scalar::from_int(0, float_backend);
  for (long k = 0; k <= l / 2; ++k) {
    Scalar c = Scalar::cos_pi(mpq_class(k, l), bits);
    Scalar base = (c * c.like(2)).to_backend(float_backend);
    if (!base.positive()) continue;
    BigFloat exponent = BigFloat(bits, 1) / BigFloat(bits, l - k);
    Scalar root(base.as_float().pow(exponent));
    if (root > rho0) rho0 = root;
  }
  out.rho0 = rho0;
  return out;
}

std::size_t jll_dimension_lower_bound(const Scalar& rho, long l) {
  BhReport bh = bh_check_rational_angle(rho, l);
  const unsigned bits = bh.rho0.backend().precision_bits;
  if (!(lift(rho, bh.rho0.backend()) - bh.rho0).positive()) {
    throw Error(ErrorKind::NotApplicable, "needs rho > rho0 = " + bh.rho0.to_display());
  }
  Scalar c1 = Scalar::cos_pi(mpq_class(1, l), bits);
  std::size_t best = 1;
  for (long k = 0; k <= l / 2; ++k) {
    Scalar ck = Scalar::cos_pi(mpq_class(k, l), bits);
    Backend backend = join(join(rho.backend(), c1.backend()), ck.backend());
    Scalar r = lift(rho, backend);
    Scalar two = r.like(2);
    const unsigned span = static_cast<unsigned>(l - k);
    Scalar gap = r.pow(span) - two * lift(ck, backend);
    Scalar rhs = (r + two * lift(c1, backend)).pow(span);
    const unsigned exp = span - 1;
    auto ok = [&](std::size_t m) {
      Scalar lhs = r.like(static_cast<long>(m)).pow(exp) * gap;
      return (lhs - rhs).nonnegative(&rhs);
    };
    if (exp == 0) {
      if (!ok(1)) throw Error(ErrorKind::NotApplicable, "inequality fails for k = " + std::to_string(k));
      continue;
    }
    std::size_t hi = 1;
    while (!ok(hi)) hi *= 2;
    std::size_t lo = hi / 2 + 1;
    if (hi == 1) lo = 1;
    while (lo < hi) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (ok(mid)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    best = std::max(best, hi);
  }
  return best;
}

bool all_hold(const std::vector<ConditionReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const ConditionReport& r) { return r.holds; });
}

}  // namespace niep
