#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "niep/compare.hpp"
#include "niep/scalar.hpp"
#include "niep/spectrum.hpp"

namespace niep::cli {

enum class OutputFormat { Text, Json, Csv };

struct CliConfig {
  Backend backend = Backend::rational();
  unsigned precision_bits = Backend::kDefaultPrecision;
  MethodCaps caps;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> output_path;
  bool strict = false;
  unsigned jobs = 1;
};

/// Raw flag text; exactly one of modsq, im or angle_pi accompanies rho, and
/// re is required unless angle_pi is given.
struct SpectrumArgs {
  std::string rho;
  std::optional<std::string> re;
  std::optional<std::string> modsq;
  std::optional<std::string> im;
  std::optional<std::string> angle_pi;
};

/// Literals are exact rationals ("7/5", "1.4", "2.5e-3") on the rational
/// backend and MPFR values on float. An angle T gives a = cos(T pi) and
/// modsq = 1, which is rational only for the handful of T where the cosine
/// is; otherwise the spectrum moves to float at the configured precision.
Spectrum3 parse_spectrum(const SpectrumArgs& args, const CliConfig& config);

/// "a,b,c" or "start:stop:step" (inclusive, exact rational steps).
std::vector<std::string> expand_grid(const std::string& spec);

enum ExitCode : int { kOk = 0, kFailure = 1, kInfeasibleAtCap = 2, kUsage = 64 };

/// Entire command line, without the program name. Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace niep::cli
