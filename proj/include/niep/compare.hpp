#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "niep/conditions.hpp"
#include "niep/spectrum.hpp"
#include "niep/verification.hpp"

namespace niep {

struct MethodCaps {
  std::size_t shifted_companion_zeros = 512;
  std::size_t laffey_dim = 512;
  std::size_t multiblock_n = 16;
  std::size_t jll_dim = 4096;
};

struct ComparisonTable {
  Spectrum3 sigma;
  /// Trace conditions, the 3x3 companion test, rho >= 2a and, for a <= 0, the
  /// closed-form zero count.
  std::vector<ConditionReport> conditions;
  std::optional<std::size_t> jll_min_dim;
  SearchOutcome shifted_companion;
  SearchOutcome laffey;
  SearchOutcome multiblock;
};

/// Runs the three searches on separate threads; the output depends only on
/// the arguments.
ComparisonTable compare_methods(const Spectrum3& sigma, const MethodCaps& caps = {});

/// Condition preamble shared by compare and the check command.
std::vector<ConditionReport> standard_conditions(const Spectrum3& sigma, std::size_t jll_dim);

}  // namespace niep
