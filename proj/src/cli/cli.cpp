#include "niep/cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "niep/cli/serialize.hpp"
#include "niep/error.hpp"
#include "niep/laffey.hpp"
#include "niep/multiblock.hpp"
#include "niep/shifted_companion.hpp"

namespace niep::cli {

namespace {

Scalar literal(const std::string& text, const CliConfig& config) {
  return config.backend.is_rational() ? Scalar::parse_rational(text) : Scalar::parse(text, config.backend);
}

mpq_class exact(const std::string& text) { return Scalar::parse_rational(text).as_rational(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt_text(const std::optional<Scalar>& s) { return s ? s->to_display() : ""; }

std::string zeros_cell(const SearchOutcome& o, std::size_t cap_zeros) {
  if (o.found()) return std::to_string(o.result->zeros_added);
  return ">" + std::to_string(cap_zeros);
}

void print_conditions(const std::vector<ConditionReport>& reports, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    json j = json::array();
    for (const ConditionReport& r : reports) j.push_back(to_json(r));
    out << j.dump(2) << "\n";
    return;
  }
  if (format == OutputFormat::Csv) {
    out << "name,holds,witness,witness_index,notes\n";
    for (const ConditionReport& r : reports) {
      out << csv_field(r.name) << "," << (r.holds ? "true" : "false") << "," << opt_text(r.witness) << ","
          << (r.witness_index ? std::to_string(*r.witness_index) : "") << "," << csv_field(r.notes) << "\n";
    }
    return;
  }
  for (const ConditionReport& r : reports) {
    out << (r.holds ? "holds  " : "FAILS  ") << r.name;
    if (r.witness) out << "  witness " << r.witness->to_display();
    if (r.witness_index) out << "  index " << *r.witness_index;
    if (!r.notes.empty()) out << "  (" << r.notes << ")";
    out << "\n";
  }
}

void print_matrix_text(const DenseMatrix& m, std::ostream& out) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "  ") << m(r, c).to_display(12);
    out << "\n";
  }
}

void print_certificate_text(const Certificate& c, std::ostream& out) {
  out << "certificate: " << (c.holds() ? "holds" : "FAILS") << " (nonnegative " << (c.nonnegative ? "yes" : "no")
      << ", charpoly " << (c.charpoly_match ? "matches" : "differs") << ", " << c.backend.name();
  if (c.approximate()) out << ", approximate";
  if (c.residual) out << ", residual " << c.residual->to_display(6) << " <= " << c.tolerance_used->to_display(6);
  out << ")\n";
}

void print_outcome_text(const SearchOutcome& o, std::ostream& out) {
  out << to_string(o.method) << ": ";
  if (o.found()) {
    const RealizationResult& r = *o.result;
    out << r.zeros_added << " zeros added, " << r.matrix.rows() << "x" << r.matrix.rows() << " matrix";
    if (!r.notes.empty()) out << "; " << r.notes;
    out << "\n";
  } else {
    out << "not found up to cap " << o.cap;
    if (!o.attempts.empty() && o.attempts.back().witness_index) {
      out << " (last attempt: index " << *o.attempts.back().witness_index;
      if (!o.attempts.back().note.empty()) out << ", " << o.attempts.back().note;
      out << ")";
    }
    out << "\n";
  }
  if (!o.notes.empty()) out << "  note: " << o.notes << "\n";
}

void write_matrix_file(const DenseMatrix& m, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::UsageError, "cannot write " + path);
  f << matrix_to_json(m).dump(2) << "\n";
}

SearchOutcome run_method(const std::string& method, const Spectrum3& sigma, const MethodCaps& caps) {
  if (method == "shifted-companion") return find_min_shifted_companion(sigma, caps.shifted_companion_zeros);
  if (method == "laffey") return find_min_laffey(sigma, caps.laffey_dim);
  if (method == "multiblock") return find_min_multiblock(sigma, caps.multiblock_n);
  throw Error(ErrorKind::UsageError, "unknown method '" + method + "'");
}

std::string sweep_row(const std::string& rho, const std::string& angle, const CliConfig& config) {
  SpectrumArgs args;
  args.rho = rho;
  args.angle_pi = angle;
  const MethodCaps& caps = config.caps;
  const std::string cap_text = std::to_string(caps.shifted_companion_zeros) + "/" +
                               std::to_string(caps.laffey_dim - 3) + "/" +
                               std::to_string(caps.multiblock_n * caps.multiblock_n - 3);
  std::ostringstream row;
  try {
    Spectrum3 s = parse_spectrum(args, config);
    ComparisonTable t = compare_methods(s, caps);
    row << rho << "," << s.a().to_display() << "," << s.modsq().to_display() << ","
        << (t.jll_min_dim ? std::to_string(*t.jll_min_dim) : ">" + std::to_string(caps.jll_dim)) << ","
        << zeros_cell(t.shifted_companion, caps.shifted_companion_zeros) << ","
        << zeros_cell(t.laffey, caps.laffey_dim - 3) << ","
        << zeros_cell(t.multiblock, caps.multiblock_n * caps.multiblock_n - 3) << "," << cap_text;
  } catch (const Error& e) {
    row << rho << ",angle-pi=" << angle << ",," << to_string(e.kind()) << ",,,," << cap_text;
  }
  return row.str();
}

unsigned env_precision() {
  const char* v = std::getenv("NIEP_PRECISION_BITS");
  if (!v || !*v) return Backend::kDefaultPrecision;
  char* end = nullptr;
  unsigned long bits = std::strtoul(v, &end, 10);
  if (*end != '\0') throw Error(ErrorKind::UsageError, std::string("NIEP_PRECISION_BITS is not an integer: ") + v);
  return static_cast<unsigned>(bits);
}

void add_spectrum_options(CLI::App* cmd, SpectrumArgs& s) {
  cmd->add_option("--rho", s.rho, "Perron root")->required();
  cmd->add_option("--re", s.re, "real part a of the conjugate pair");
  cmd->add_option("--modsq", s.modsq, "|lambda_2|^2 = a^2 + b^2");
  cmd->add_option("--im", s.im, "imaginary part b");
  cmd->add_option("--angle-pi", s.angle_pi, "pair e^{+-i T pi} of modulus 1");
}

}  // namespace

Spectrum3 parse_spectrum(const SpectrumArgs& args, const CliConfig& config) {
  const int forms = (args.modsq ? 1 : 0) + (args.im ? 1 : 0) + (args.angle_pi ? 1 : 0);
  if (forms != 1) throw Error(ErrorKind::UsageError, "give exactly one of --modsq, --im, --angle-pi");
  if (args.angle_pi && args.re) throw Error(ErrorKind::UsageError, "--angle-pi determines the real part; drop --re");
  if (!args.angle_pi && !args.re) throw Error(ErrorKind::UsageError, "--re is required with --modsq or --im");

  Scalar rho = literal(args.rho, config);
  if (args.angle_pi) {
    Spectrum3 s = Spectrum3::from_angle(rho, exact(*args.angle_pi), config.precision_bits);
    if (config.backend.is_float()) return s.to_backend(config.backend);
    return s;
  }
  Scalar a = literal(*args.re, config);
  if (args.im) return Spectrum3::from_re_im(rho, a, literal(*args.im, config));
  return Spectrum3::make(rho, a, literal(*args.modsq, config));
}

std::vector<std::string> expand_grid(const std::string& spec) {
  std::vector<std::string> out;
  if (spec.find(':') == std::string::npos) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(item);
    }
  } else {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw Error(ErrorKind::UsageError, "grid range is start:stop:step");
    const mpq_class start = exact(parts[0]);
    const mpq_class stop = exact(parts[1]);
    const mpq_class step = exact(parts[2]);
    if (step <= 0) throw Error(ErrorKind::UsageError, "grid step must be positive");
    for (mpq_class v = start; v <= stop; v += step) {
      out.push_back(v.get_str());
      if (out.size() > 100000) throw Error(ErrorKind::UsageError, "grid too large");
    }
  }
  if (out.empty()) throw Error(ErrorKind::UsageError, "empty grid '" + spec + "'");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonnegative realizations of (rho, a +- ib) with appended zeros"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  std::string backend_name = "rational";
  std::optional<unsigned> precision;
  std::string format_name = "text";
  std::optional<std::string> out_path;
  app.add_option("--backend", backend_name, "rational or float")->check(CLI::IsMember({"rational", "float"}));
  app.add_option("--precision", precision, "float precision in bits (default 256 or NIEP_PRECISION_BITS)");
  app.add_option("--format", format_name, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "write the realizing matrix as JSON to this file");
  app.add_flag("--strict", config.strict, "exit 2 when a search reaches its cap");
  app.add_option("--max-zeros", config.caps.shifted_companion_zeros, "shifted-companion cap on appended zeros");
  app.add_option("--max-dim", config.caps.laffey_dim, "Laffey cap on the matrix dimension");
  app.add_option("--max-blocks", config.caps.multiblock_n, "multi-block cap on N (dimension N^2)");
  app.add_option("--jobs", config.jobs, "sweep worker threads")->check(CLI::PositiveNumber);

  SpectrumArgs spectrum;
  std::vector<std::size_t> dims;
  CLI::App* check = app.add_subcommand("check", "necessary conditions");
  add_spectrum_options(check, spectrum);
  check->add_option("--dim", dims, "total dimension(s) for the JLL inequalities (default 3 and 4)");

  std::string method;
  CLI::App* realize = app.add_subcommand("realize", "construct a realizing matrix");
  add_spectrum_options(realize, spectrum);
  realize->add_option("--method", method, "shifted-companion, laffey or multiblock")->required();

  CLI::App* compare = app.add_subcommand("compare", "run all three constructions");
  add_spectrum_options(compare, spectrum);

  std::string matrix_path;
  CLI::App* verify = app.add_subcommand("verify", "certify a matrix file");
  add_spectrum_options(verify, spectrum);
  verify->add_option("--matrix", matrix_path, "JSON matrix file")->required();

  std::string rho_grid;
  std::string angle_grid;
  CLI::App* sweep = app.add_subcommand("sweep", "CSV of minimal zeros over a (rho, angle) grid");
  sweep->add_option("--rho-grid", rho_grid, "a,b,c or start:stop:step")->required();
  sweep->add_option("--angle-grid", angle_grid, "values T of the pair e^{+-i T pi}")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    config.precision_bits = precision ? *precision : env_precision();
    if (config.precision_bits < Backend::kMinPrecision) {
      throw Error(ErrorKind::UsageError, "precision must be at least 64 bits");
    }
    if (backend_name == "float") config.backend = Backend::floating(config.precision_bits);
    config.format = format_name == "json" ? OutputFormat::Json
                    : format_name == "csv" ? OutputFormat::Csv
                                           : OutputFormat::Text;
    config.output_path = out_path;

    if (sweep->parsed()) {
      const std::vector<std::string> rhos = expand_grid(rho_grid);
      const std::vector<std::string> angles = expand_grid(angle_grid);
      std::vector<std::pair<std::string, std::string>> points;
      for (const auto& r : rhos) {
        for (const auto& t : angles) points.emplace_back(r, t);
      }
      std::vector<std::string> rows(points.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i; (i = next++) < points.size();) rows[i] = sweep_row(points[i].first, points[i].second, config);
      };
      std::vector<std::thread> pool;
      const unsigned n = std::min<unsigned>(config.jobs, static_cast<unsigned>(points.size()));
      for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
      worker();
      for (std::thread& t : pool) t.join();
      out << "rho,a,modsq,jll_min_n,m1_zeros,m2_zeros,m3_zeros,caps\n";
      for (const std::string& r : rows) out << r << "\n";
      return kOk;
    }

    const Spectrum3 sigma = parse_spectrum(spectrum, config);

    if (check->parsed()) {
      if (dims.empty()) dims = {3, 4};
      std::vector<ConditionReport> reports;
      for (std::size_t d : dims) {
        std::vector<ConditionReport> r = check_jll(sigma, d);
        reports.insert(reports.end(), r.begin(), r.end());
      }
      reports.push_back(check_n3_companion(sigma));
      reports.push_back(check_rho_ge_2a(sigma));
      std::vector<ConditionReport> extra = standard_conditions(sigma, 3);
      if (!sigma.a().positive()) reports.push_back(extra.back());
      print_conditions(reports, config.format, out);
      return kOk;
    }

    if (realize->parsed()) {
      SearchOutcome o = run_method(method, sigma, config.caps);
      if (o.found() && config.output_path) write_matrix_file(o.result->matrix, *config.output_path);
      if (config.format == OutputFormat::Json) {
        out << to_json(o).dump(2) << "\n";
      } else if (config.format == OutputFormat::Csv) {
        if (o.found()) {
          const DenseMatrix& m = o.result->matrix;
          for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << m(r, c).to_string();
            out << "\n";
          }
        }
      } else {
        print_outcome_text(o, out);
        if (o.found()) {
          print_matrix_text(o.result->matrix, out);
          print_certificate_text(o.result->certificate, out);
        }
      }
      return !o.found() && config.strict ? kInfeasibleAtCap : kOk;
    }

    if (compare->parsed()) {
      ComparisonTable t = compare_methods(sigma, config.caps);
      if (config.format == OutputFormat::Json) {
        out << to_json(t).dump(2) << "\n";
      } else if (config.format == OutputFormat::Csv) {
        out << "method,found,zeros_added,dim,cap\n";
        for (const SearchOutcome* o : {&t.shifted_companion, &t.laffey, &t.multiblock}) {
          out << to_string(o->method) << "," << (o->found() ? "true" : "false") << ","
              << (o->found() ? std::to_string(o->result->zeros_added) : "") << ","
              << (o->found() ? std::to_string(o->result->matrix.rows()) : "") << "," << o->cap << "\n";
        }
      } else {
        out << "sigma " << sigma.to_string() << "\n";
        out << "JLL minimal dimension: "
            << (t.jll_min_dim ? std::to_string(*t.jll_min_dim) : "> " + std::to_string(config.caps.jll_dim)) << "\n";
        std::vector<ConditionReport> failing;
        for (const ConditionReport& r : t.conditions) {
          if (!r.holds) failing.push_back(r);
        }
        out << t.conditions.size() - failing.size() << " of " << t.conditions.size()
            << " conditions hold at that dimension\n";
        print_conditions(failing, OutputFormat::Text, out);
        for (const SearchOutcome* o : {&t.shifted_companion, &t.laffey, &t.multiblock}) print_outcome_text(*o, out);
      }
      bool any_missing = !t.shifted_companion.found() || !t.laffey.found() || !t.multiblock.found();
      return any_missing && config.strict ? kInfeasibleAtCap : kOk;
    }

    if (verify->parsed()) {
      std::ifstream f(matrix_path);
      if (!f) throw Error(ErrorKind::UsageError, "cannot read " + matrix_path);
      json j;
      try {
        j = json::parse(f);
      } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("matrix file: ") + e.what());
      }
      DenseMatrix m = matrix_from_json(j);
      Certificate c = verify_realization(m, sigma);
      if (config.format == OutputFormat::Json) {
        out << to_json(c).dump(2) << "\n";
      } else if (config.format == OutputFormat::Csv) {
        out << "holds,nonnegative,charpoly_match,backend,residual\n"
            << c.holds() << "," << c.nonnegative << "," << c.charpoly_match << "," << c.backend.name() << ","
            << opt_text(c.residual) << "\n";
      } else {
        print_certificate_text(c, out);
      }
      return c.holds() ? kOk : kFailure;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::UsageError || e.kind() == ErrorKind::ParseError ? kUsage : kFailure;
  }
  return kUsage;
}

}  // namespace niep::cli
