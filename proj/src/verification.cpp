#include "niep/verification.hpp"

#include <stdexcept>

#include "niep/error.hpp"

namespace niep {

std::string to_string(Method method) {
  switch (method) {
    case Method::ShiftedCompanion: return "shifted-companion";
    case Method::Laffey: return "laffey";
    case Method::MultiBlock: return "multiblock";
    case Method::External: return "external";
  }
  return "unknown";
}

namespace {

Backend float_if_any(const Backend& x, const Backend& y) {
  if (x.is_float()) return x;
  return y;
}

}  // namespace

Certificate verify_realization(const DenseMatrix& a, const Polynomial& target) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "realizing matrix must be square");
  if (target.degree() != a.rows() || !target.is_monic()) {
    throw Error(ErrorKind::BadDimension, "target must be monic of degree " + std::to_string(a.rows()));
  }
  const Backend backend = float_if_any(a.backend(), target.backend());
  DenseMatrix m = a.to_backend(backend);

  Certificate cert;
  cert.backend = backend;
  cert.nonnegative = true;
  for (const Scalar& e : m.entries()) {
    if (!cert.min_entry || e < *cert.min_entry) cert.min_entry = e;
    if (!e.nonnegative()) cert.nonnegative = false;
  }

  Polynomial got = charpoly_auto(m);
  if (backend.is_rational()) {
    cert.charpoly_match = got == target;
    return cert;
  }
  const long bits = static_cast<long>(backend.precision_bits);
  Scalar tol(BigFloat::exp2(bits, -(bits / 3)));
  Scalar residual = Scalar::from_int(0, backend);
  for (std::size_t i = 0; i <= target.degree(); ++i) {
    Scalar d = (got[i] - target[i].to_backend(backend)).abs();
    if (d > residual) residual = d;
  }
  cert.tolerance_used = tol;
  cert.charpoly_match = got.degree() == target.degree() && residual <= tol;
  cert.residual = residual;
  return cert;
}

Certificate verify_realization(const DenseMatrix& a, const Spectrum3& sigma) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "realizing matrix must be square");
  if (a.rows() < 3) throw Error(ErrorKind::BadDimension, "a realizing matrix has dimension at least 3");
  const Backend backend = float_if_any(a.backend(), sigma.backend());
  return verify_realization(a, sigma.to_backend(backend).with_zeros(a.rows() - 3));
}

RealizationResult certify(Method method, DenseMatrix matrix, const Spectrum3& sigma, std::string notes) {
  RealizationResult out;
  out.method = method;
  out.zeros_added = matrix.rows() - 3;
  out.certificate = verify_realization(matrix, sigma);
  if (!out.certificate.holds()) {
    throw std::logic_error(to_string(method) + " produced a matrix that fails verification for " + sigma.to_string());
  }
  out.matrix = std::move(matrix);
  out.notes = std::move(notes);
  return out;
}

namespace {

struct Complex {
  Scalar re;
  Scalar im;
};

Complex horner(const Polynomial& p, const Complex& z) {
  Complex acc{p.leading(), p.leading().zero_like()};
  for (std::size_t i = p.degree(); i-- > 0;) {
    Scalar re = acc.re * z.re - acc.im * z.im + p[i];
    Scalar im = acc.re * z.im + acc.im * z.re;
    acc = {std::move(re), std::move(im)};
  }
  return acc;
}

Scalar modulus(const Complex& z) { return (z.re * z.re + z.im * z.im).sqrt(); }

}  // namespace

std::vector<Scalar> numeric_eigen_residuals(const DenseMatrix& a, const Spectrum3& sigma) {
  if (!a.backend().is_float()) {
    throw Error(ErrorKind::WrongBackend, "numeric eigenvalue check is for Float matrices; use verify_realization");
  }
  const Backend backend = a.backend();
  Spectrum3 s = sigma.to_backend(backend);
  Polynomial p = charpoly_auto(a);
  const Scalar zero = Scalar::from_int(0, backend);
  Scalar b = s.imag_sq().sqrt();

  std::vector<Scalar> out;
  out.push_back(modulus(horner(p, {s.rho(), zero})));
  out.push_back(modulus(horner(p, {s.a(), b})));
  if (a.rows() > 3) out.push_back(p[0].abs());
  return out;
}

bool numeric_eigen_check(const DenseMatrix& a, const Spectrum3& sigma, const Scalar& tol) {
  Scalar t = tol.to_backend(a.backend());
  // the conjugate root gives the conjugate value, so one of the pair suffices
  for (const Scalar& r : numeric_eigen_residuals(a, sigma)) {
    if (r > t) return false;
  }
  return true;
}

}  // namespace niep
