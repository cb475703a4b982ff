#include "niep/multiblock.hpp"

#include "niep/error.hpp"
#include "niep/series.hpp"

namespace niep {

Polynomial compute_ftilde(const Spectrum3& sigma) {
  const Scalar& rho = sigma.rho();
  const Scalar one = rho.one_like();
  return Polynomial({one, -rho}) * Polynomial({one, -(sigma.a() * rho.like(2)), sigma.modsq()});
}

SeriesRoot series_l_coefficients(const Spectrum3& sigma, std::size_t n, std::size_t horizon) {
  if (n == 0) throw Error(ErrorKind::BadDimension, "series root order must be positive");
  if (horizon == 0) horizon = std::max<std::size_t>(n, 3);
  TruncatedSeries g = series_nth_root(TruncatedSeries::from_polynomial(compute_ftilde(sigma), horizon), n);
  SeriesRoot out;
  out.all_positive = true;
  for (std::size_t i = 1; i <= horizon; ++i) {
    out.l.push_back(-g[i]);
    if (out.all_positive && !out.l.back().positive()) {
      out.all_positive = false;
      out.first_nonpositive_index = i;
    }
  }
  return out;
}

Polynomial block_polynomial(const std::vector<Scalar>& l, std::size_t n) {
  if (l.size() < n) throw Error(ErrorKind::BadDimension, "need l_1 .. l_N");
  std::vector<Scalar> asc(n + 1, l.front().zero_like());
  asc[n] = l.front().one_like();
  for (std::size_t i = 1; i <= n; ++i) asc[n - i] = -l[i - 1];
  return Polynomial(std::move(asc));
}

Ladder division_ladder(const Spectrum3& sigma, const Polynomial& e, std::size_t n) {
  if (n < 2 || e.degree() != n || !e.is_monic()) {
    throw Error(ErrorKind::BadModulus, "modulus must be monic of degree N = " + std::to_string(n));
  }
  Ladder out;
  Polynomial q = sigma.with_zeros(n * n - 3);
  for (std::size_t i = 1; i < n; ++i) {
    DivRem d = poly_divrem(q, e);
    out.remainders.push_back(std::move(d.remainder));
    q = std::move(d.quotient);
  }
  out.final_quotient = std::move(q);
  return out;
}

Polynomial reassemble(const Polynomial& e, const Ladder& ladder) {
  Polynomial acc = ladder.final_quotient;
  for (std::size_t i = ladder.remainders.size(); i-- > 0;) acc = acc * e + ladder.remainders[i];
  return acc;
}

MultiBlockLayout build_multiblock_layout(const Spectrum3& sigma, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::BadDimension, "multi-block layout needs N >= 2");
  MultiBlockLayout out;
  out.n = n;
  out.series = series_l_coefficients(sigma, n);
  out.e = block_polynomial(out.series.l, n);
  if (!out.series.all_positive) return out;

  out.ladder = division_ladder(sigma, out.e, n);
  out.feasible = true;
  for (const Polynomial& r : out.ladder.remainders) {
    for (std::size_t j = 0; j < n; ++j) {
      out.last_row.push_back(-r[j]);
      if (out.feasible && !out.last_row.back().nonnegative()) {
        out.feasible = false;
        out.first_negative_index = out.last_row.size();
      }
    }
  }
  return out;
}

DenseMatrix assemble_multiblock(const MultiBlockLayout& layout) {
  if (!layout.feasible) {
    throw Error(ErrorKind::InfeasibleLayout, "multi-block layout for N = " + std::to_string(layout.n) +
                                                 " has a negative coefficient");
  }
  const std::size_t n = layout.n;
  const std::size_t dim = n * n;
  const DenseMatrix block = DenseMatrix::companion(layout.e);
  DenseMatrix m(dim, dim, layout.e.backend());
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(b * n + r, b * n + c) = block(r, c);
    }
    if (b + 1 < n) m(b * n + n - 1, (b + 1) * n) = layout.e.leading();
  }
  for (std::size_t j = 0; j < layout.last_row.size(); ++j) m(dim - 1, j) = layout.last_row[j];
  return m;
}

SearchOutcome find_min_multiblock(const Spectrum3& sigma, std::size_t max_n) {
  SearchOutcome out;
  out.method = Method::MultiBlock;
  out.cap = max_n;
  std::size_t ladders = 0;
  for (std::size_t n = 2; n <= max_n; ++n) {
    MultiBlockLayout layout = build_multiblock_layout(sigma, n);
    SearchAttempt at;
    at.parameter = n;
    at.feasible = layout.feasible;
    if (!layout.series.all_positive) {
      std::size_t i = *layout.series.first_nonpositive_index;
      at.witness_index = static_cast<long>(i);
      at.witness = layout.series.l[i - 1];
      at.note = "l_" + std::to_string(i) + " <= 0";
    } else {
      ++ladders;
      if (layout.first_negative_index) {
        std::size_t i = *layout.first_negative_index;
        at.witness_index = static_cast<long>(i);
        at.witness = layout.last_row[i - 1];
        at.note = "last-row entry " + std::to_string(i) + " < 0";
      }
    }
    out.attempts.push_back(std::move(at));
    if (layout.feasible) {
      std::string notes = "N = " + std::to_string(n) + " (" + std::to_string(ladders) + " ladder attempts)";
      if (sigma.backend().is_float()) notes += "; approximate (float sign rule)";
      out.result = certify(Method::MultiBlock, assemble_multiblock(layout), sigma, notes);
      break;
    }
  }
  return out;
}

}  // namespace niep
