#include "niep/spectrum.hpp"

#include "niep/error.hpp"

namespace niep {

namespace {

Backend widest(const Scalar& x, const Scalar& y, const Scalar& z) {
  Backend out = Backend::rational();
  for (const Scalar* s : {&x, &y, &z}) {
    Backend b = s->backend();
    if (b.is_float() && (out.is_rational() || b.precision_bits > out.precision_bits)) out = b;
  }
  return out;
}

}  // namespace

Spectrum3 Spectrum3::make(Scalar rho, Scalar a, Scalar modsq) {
  Backend backend = widest(rho, a, modsq);
  rho = rho.to_backend(backend);
  a = a.to_backend(backend);
  modsq = modsq.to_backend(backend);

  Scalar b_sq = modsq - a * a;
  if (!b_sq.positive()) {
    throw Error(ErrorKind::NonRealRequired,
                "the conjugate pair must be non-real (m - a^2 = " + b_sq.to_display() + ")");
  }
  if (!rho.positive()) throw Error(ErrorKind::PerronViolated, "rho must be positive");
  Scalar gap = rho * rho - modsq;
  if (!gap.nonnegative()) {
    throw Error(ErrorKind::PerronViolated, "rho^2 < |lambda_2|^2 (difference " + gap.to_display() + ")");
  }
  return Spectrum3(std::move(rho), std::move(a), std::move(modsq));
}

Spectrum3 Spectrum3::from_re_im(const Scalar& rho, const Scalar& a, const Scalar& b) {
  Backend backend = widest(rho, a, b);
  Scalar bb = b.to_backend(backend);
  Scalar aa = a.to_backend(backend);
  return make(rho, aa, aa * aa + bb * bb);
}

Spectrum3 Spectrum3::from_angle(const Scalar& rho, const mpq_class& t, unsigned precision_bits) {
  Scalar a = Scalar::cos_pi(t, precision_bits);
  return make(rho, a, a.one_like());
}

bool Spectrum3::strict_perron() const { return (rho_ * rho_ - modsq_).positive(); }

Polynomial Spectrum3::cubic() const {
  const Scalar two = rho_.like(2);
  return Polynomial({-(rho_ * modsq_), modsq_ + two * a_ * rho_, -(rho_ + two * a_), rho_.one_like()});
}

Polynomial Spectrum3::with_zeros(std::size_t zeros) const { return cubic().shifted_up(zeros); }

Spectrum3 Spectrum3::to_backend(const Backend& backend) const {
  return Spectrum3(rho_.to_backend(backend), a_.to_backend(backend), modsq_.to_backend(backend));
}

std::string Spectrum3::to_string() const {
  return "(rho=" + rho_.to_display() + ", a=" + a_.to_display() + ", modsq=" + modsq_.to_display() + ")";
}

PowerSums power_sums(const Spectrum3& sigma, std::size_t count) {
  const Scalar two_a = sigma.a() * sigma.a().like(2);
  Scalar t_prev = sigma.a().like(2);  // t_0
  Scalar t_cur = two_a;               // t_1
  Scalar rho_pow = sigma.rho();
  PowerSums out;
  out.values.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) {
    out.values.push_back(rho_pow + t_cur);
    Scalar t_next = two_a * t_cur - sigma.modsq() * t_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
    rho_pow *= sigma.rho();
  }
  return out;
}

}  // namespace niep
