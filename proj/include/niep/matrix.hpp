#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "niep/polynomial.hpp"
#include "niep/scalar.hpp"

namespace niep {

/// Row-major dense matrix over Scalar.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, const Backend& backend);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static DenseMatrix identity(std::size_t n, const Backend& backend);
  /// Companion matrix of a monic polynomial: ones on the superdiagonal and
  /// -p_0 .. -p_{n-1} across the last row.
  static DenseMatrix companion(const Polynomial& monic);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  Backend backend() const { return backend_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Scalar> entries() const { return entries_; }

  DenseMatrix transposed() const;
  DenseMatrix to_backend(const Backend& backend) const;
  Scalar trace() const;

  /// All entries nonzero only on or below the superdiagonal.
  bool is_lower_hessenberg() const;
  bool is_upper_hessenberg() const;

  friend DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);
  friend DenseMatrix operator+(const DenseMatrix& lhs, const DenseMatrix& rhs);
  friend bool operator==(const DenseMatrix& lhs, const DenseMatrix& rhs);

 private:
  std::size_t rows_;
  std::size_t cols_;
  Backend backend_;
  std::vector<Scalar> entries_;
};

/// det(xI - A) by the Faddeev-LeVerrier trace recursion, O(n^4).
Polynomial charpoly(const DenseMatrix& a);

/// det(xI - A) for an upper or lower Hessenberg matrix by the classical
/// O(n^3) recurrence over leading principal submatrices. Throws NotSquare or
/// NotApplicable when the shape does not fit.
Polynomial charpoly_hessenberg(const DenseMatrix& a);

/// Hessenberg recurrence when the shape allows, Faddeev-LeVerrier otherwise.
Polynomial charpoly_auto(const DenseMatrix& a);

}  // namespace niep
