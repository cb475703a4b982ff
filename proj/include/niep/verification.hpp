#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "niep/matrix.hpp"
#include "niep/polynomial.hpp"
#include "niep/scalar.hpp"
#include "niep/spectrum.hpp"

namespace niep {

enum class Method { ShiftedCompanion, Laffey, MultiBlock, External };

std::string to_string(Method method);

/// Evidence that a matrix realizes a target spectrum.
///
/// On Rational, `charpoly_match` is exact polynomial equality and `residual`
/// is empty. On Float, `charpoly_match` means the largest coefficient
/// deviation `residual` is at most `tolerance_used` (2^(-P/3)), and
/// nonnegativity allows entries down to -2^(-P/2); such certificates are
/// approximate.
struct Certificate {
  bool nonnegative = false;
  bool charpoly_match = false;
  Backend backend;
  std::optional<Scalar> tolerance_used;
  std::optional<Scalar> residual;
  /// Smallest entry, for auditing how close to the boundary the matrix is.
  std::optional<Scalar> min_entry;

  bool holds() const { return nonnegative && charpoly_match; }
  bool approximate() const { return backend.is_float(); }
};

struct RealizationResult {
  Method method = Method::External;
  std::size_t zeros_added = 0;
  DenseMatrix matrix{0, 0, Backend::rational()};
  Certificate certificate;
  std::string notes;
};

/// One parameter value tried by a minimal-size search. `witness_index` is the
/// first offending coefficient index, `witness` its value.
struct SearchAttempt {
  std::size_t parameter = 0;
  bool feasible = false;
  std::optional<long> witness_index;
  std::optional<Scalar> witness;
  std::string note;
};

/// Result of scanning a method's size parameter up to `cap`. Without a
/// result this is the not-found-up-to-cap outcome: nothing beyond the cap is
/// claimed.
struct SearchOutcome {
  Method method = Method::External;
  std::size_t cap = 0;
  std::optional<RealizationResult> result;
  std::vector<SearchAttempt> attempts;
  std::string notes;
  /// Smallest nonnegativity margin of the returned realization, and the same
  /// relative to its rounding scale, where the method tracks them.
  std::optional<Scalar> margin;
  std::optional<Scalar> relative_margin;

  bool found() const { return result.has_value(); }
};

/// Certificate against x^(dim-3) (x - rho)(x^2 - 2ax + m). Throws
/// BadDimension for dimension < 3, NotSquare for non-square input.
Certificate verify_realization(const DenseMatrix& a, const Spectrum3& sigma);

/// Certificate against an explicit monic target of degree dim.
Certificate verify_realization(const DenseMatrix& a, const Polynomial& target);

/// Wraps a freshly constructed matrix into a RealizationResult and refuses
/// (std::logic_error) to hand out one whose certificate does not hold.
RealizationResult certify(Method method, DenseMatrix matrix, const Spectrum3& sigma, std::string notes = {});

/// Float only (WrongBackend otherwise): |det(lambda I - A)| <= tol at
/// lambda = rho, a + ib, a - ib, and at 0 when the dimension exceeds 3.
bool numeric_eigen_check(const DenseMatrix& a, const Spectrum3& sigma, const Scalar& tol);

/// The residuals behind numeric_eigen_check, in the order rho, a + ib, 0.
std::vector<Scalar> numeric_eigen_residuals(const DenseMatrix& a, const Spectrum3& sigma);

}  // namespace niep
