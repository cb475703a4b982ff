#include "niep/compare.hpp"

#include <future>

#include "niep/laffey.hpp"
#include "niep/multiblock.hpp"
#include "niep/shifted_companion.hpp"

namespace niep {

std::vector<ConditionReport> standard_conditions(const Spectrum3& sigma, std::size_t jll_dim) {
  std::vector<ConditionReport> out = check_jll(sigma, jll_dim);
  out.push_back(check_n3_companion(sigma));
  out.push_back(check_rho_ge_2a(sigma));
  if (!sigma.a().positive()) {
    ConditionReport r;
    r.name = "minimal_zeros(a<=0)";
    std::optional<std::size_t> n = minimal_zeros_nonpositive_a(sigma);
    r.holds = n.has_value();
    if (n) r.witness_index = static_cast<long>(*n);
    r.notes = n ? "least N with (N+3) s_2 >= s_1^2" : "s_2 <= 0: no number of zeros suffices";
    out.push_back(std::move(r));
  }
  return out;
}

ComparisonTable compare_methods(const Spectrum3& sigma, const MethodCaps& caps) {
  auto m1 = std::async(std::launch::async, [&] { return find_min_shifted_companion(sigma, caps.shifted_companion_zeros); });
  auto m2 = std::async(std::launch::async, [&] { return find_min_laffey(sigma, caps.laffey_dim); });
  auto m3 = std::async(std::launch::async, [&] { return find_min_multiblock(sigma, caps.multiblock_n); });

  std::optional<std::size_t> jll = jll_minimal_dimension(sigma, {}, caps.jll_dim);
  std::vector<ConditionReport> conditions = standard_conditions(sigma, jll.value_or(3));
  return ComparisonTable{sigma, std::move(conditions), jll, m1.get(), m2.get(), m3.get()};
}

}  // namespace niep
