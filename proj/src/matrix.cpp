#include "niep/matrix.hpp"

#include "niep/error.hpp"

namespace niep {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, const Backend& backend)
    : rows_(rows), cols_(cols), backend_(backend), entries_(rows * cols, Scalar::from_int(0, backend)) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorKind::BadDimension, "entry count does not match " + std::to_string(rows) + "x" +
                                             std::to_string(cols));
  }
  backend_ = entries_.empty() ? Backend::rational() : entries_.front().backend();
  for (const Scalar& e : entries_) {
    if (e.backend() != backend_) throw Error(ErrorKind::BackendMismatch, "matrix entries on mixed backends");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n, const Backend& backend) {
  DenseMatrix m(n, n, backend);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::from_int(1, backend);
  return m;
}

DenseMatrix DenseMatrix::companion(const Polynomial& monic) {
  if (!monic.is_monic()) throw Error(ErrorKind::NotMonic, "companion matrix needs a monic polynomial");
  const std::size_t n = monic.degree();
  DenseMatrix m(n, n, monic.backend());
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = Scalar::from_int(1, monic.backend());
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = -monic[j];
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_, backend_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

DenseMatrix DenseMatrix::to_backend(const Backend& backend) const {
  std::vector<Scalar> out;
  out.reserve(entries_.size());
  for (const Scalar& e : entries_) out.push_back(e.to_backend(backend));
  DenseMatrix m(rows_, cols_, std::move(out));
  m.backend_ = backend;
  return m;
}

Scalar DenseMatrix::trace() const {
  Scalar t = Scalar::from_int(0, backend_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool DenseMatrix::is_lower_hessenberg() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 2; c < cols_; ++c) {
      if (!(*this)(r, c).is_exact_zero()) return false;
    }
  }
  return true;
}

bool DenseMatrix::is_upper_hessenberg() const {
  for (std::size_t r = 2; r < rows_; ++r) {
    for (std::size_t c = 0; c + 1 < r && c < cols_; ++c) {
      if (!(*this)(r, c).is_exact_zero()) return false;
    }
  }
  return true;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw Error(ErrorKind::BadDimension, "matrix product shape mismatch");
  if (lhs.backend_ != rhs.backend_) throw Error(ErrorKind::BackendMismatch, "matrix product across backends");
  DenseMatrix out(lhs.rows_, rhs.cols_, lhs.backend_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs(i, k);
      if (a.is_exact_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (!rhs(k, j).is_exact_zero()) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

DenseMatrix operator+(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
    throw Error(ErrorKind::BadDimension, "matrix sum shape mismatch");
  }
  DenseMatrix out = lhs;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
  return out;
}

bool operator==(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.entries_ == rhs.entries_;
}

Polynomial charpoly(const DenseMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  const Backend backend = a.backend();
  // c[n] = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  std::vector<Scalar> c(n + 1, Scalar::from_int(0, backend));
  c[n] = Scalar::from_int(1, backend);
  DenseMatrix m(n, n, backend);
  DenseMatrix am(n, n, backend);  // A * M_{k-1}, zero for k = 1
  for (std::size_t k = 1; k <= n; ++k) {
    m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    am = a * m;
    c[n - k] = -am.trace() / Scalar::from_int(static_cast<long>(k), backend);
  }
  return Polynomial(std::move(c));
}

Polynomial charpoly_hessenberg(const DenseMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "characteristic polynomial of a non-square matrix");
  if (!a.is_upper_hessenberg()) {
    if (a.is_lower_hessenberg()) return charpoly_hessenberg(a.transposed());
    throw Error(ErrorKind::NotApplicable, "matrix is not in Hessenberg form");
  }
  const std::size_t n = a.rows();
  const Backend backend = a.backend();
  const Scalar zero = Scalar::from_int(0, backend);

  // p[k] = det(xI - H_k), H_k the leading k x k block; ascending coefficients.
  std::vector<std::vector<Scalar>> p(n + 1);
  p[0] = {Scalar::from_int(1, backend)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Scalar> next(k + 1, zero);
    const std::vector<Scalar>& prev = p[k - 1];
    const Scalar& diag = a(k - 1, k - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] += prev[d];
      if (!diag.is_exact_zero()) next[d] -= diag * prev[d];
    }
    // - sum_{i<k} h(i,k) * prod_{j=i+1..k} h(j,j-1) * p[i-1]   (1-based)
    Scalar chain = Scalar::from_int(1, backend);
    for (std::size_t i = k - 1; i >= 1; --i) {
      chain *= a(i, i - 1);
      if (chain.is_exact_zero()) break;
      const Scalar& h = a(i - 1, k - 1);
      if (!h.is_exact_zero()) {
        Scalar w = h * chain;
        const std::vector<Scalar>& lower = p[i - 1];
        for (std::size_t d = 0; d < lower.size(); ++d) next[d] -= w * lower[d];
      }
    }
    p[k] = std::move(next);
  }
  return Polynomial(std::move(p[n]));
}

Polynomial charpoly_auto(const DenseMatrix& a) {
  if (a.is_square() && (a.is_upper_hessenberg() || a.is_lower_hessenberg())) return charpoly_hessenberg(a);
  return charpoly(a);
}

}  // namespace niep
