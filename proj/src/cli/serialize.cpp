#include "niep/cli/serialize.hpp"

#include "niep/error.hpp"

namespace niep::cli {

namespace {

// Exact text plus, on Float, a decimal rendering under "<key>_decimal".
void put(json& j, const std::string& key, const Scalar& s) {
  j[key] = s.to_string();
  if (s.is_float()) j[key + "_decimal"] = s.to_display(30);
}

void put(json& j, const std::string& key, const std::optional<Scalar>& s) {
  if (s) {
    put(j, key, *s);
  } else {
    j[key] = nullptr;
  }
}

}  // namespace

Backend parse_backend_name(const std::string& name) {
  if (name == "rational") return Backend::rational();
  if (name.rfind("float", 0) == 0 && name.size() > 5) {
    try {
      std::size_t used = 0;
      unsigned long bits = std::stoul(name.substr(5), &used);
      if (used == name.size() - 5) return Backend::floating(static_cast<unsigned>(bits));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorKind::ParseError, "unknown backend '" + name + "'");
}

json matrix_to_json(const DenseMatrix& m) {
  json entries = json::array();
  json decimal = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    json drow = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c).to_string());
      drow.push_back(m(r, c).to_display(30));
    }
    entries.push_back(std::move(row));
    decimal.push_back(std::move(drow));
  }
  json j{{"dim", m.rows()}, {"backend", m.backend().name()}, {"entries", std::move(entries)}};
  if (m.backend().is_float()) j["entries_decimal"] = std::move(decimal);
  return j;
}

DenseMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("backend") || !j.contains("entries")) {
    throw Error(ErrorKind::ParseError, "matrix file needs dim, backend and entries");
  }
  if (!j["dim"].is_number_unsigned()) throw Error(ErrorKind::ParseError, "dim must be a nonnegative integer");
  const std::size_t dim = j["dim"].get<std::size_t>();
  const Backend backend = parse_backend_name(j["backend"].get<std::string>());
  const json& rows = j["entries"];
  if (!rows.is_array() || rows.size() != dim) {
    throw Error(ErrorKind::BadDimension, "dim = " + std::to_string(dim) + " but entries has " +
                                             std::to_string(rows.is_array() ? rows.size() : 0) + " rows");
  }
  std::vector<Scalar> entries;
  entries.reserve(dim * dim);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != dim) throw Error(ErrorKind::BadDimension, "every row must have dim entries");
    for (const json& e : row) {
      if (!e.is_string()) throw Error(ErrorKind::ParseError, "entries must be strings");
      const std::string text = e.get<std::string>();
      entries.push_back(backend.is_rational() ? Scalar::parse_rational(text) : Scalar::parse(text, backend));
    }
  }
  return DenseMatrix(dim, dim, std::move(entries));
}

json to_json(const ConditionReport& r) {
  json j{{"name", r.name}, {"holds", r.holds}, {"notes", r.notes}};
  put(j, "witness", r.witness);
  j["witness_index"] = r.witness_index ? json(*r.witness_index) : json(nullptr);
  return j;
}

json to_json(const Certificate& c) {
  json j{{"holds", c.holds()},
         {"nonnegative", c.nonnegative},
         {"charpoly_match", c.charpoly_match},
         {"backend", c.backend.name()},
         {"approximate", c.approximate()}};
  put(j, "tolerance_used", c.tolerance_used);
  put(j, "residual", c.residual);
  put(j, "min_entry", c.min_entry);
  return j;
}

json to_json(const RealizationResult& r) {
  return json{{"method", to_string(r.method)},     {"zeros_added", r.zeros_added},
              {"dim", r.matrix.rows()},            {"matrix", matrix_to_json(r.matrix)},
              {"certificate", to_json(r.certificate)}, {"notes", r.notes}};
}

json to_json(const SearchOutcome& o) {
  json attempts = json::array();
  for (const SearchAttempt& a : o.attempts) {
    json ja{{"parameter", a.parameter}, {"feasible", a.feasible}, {"note", a.note}};
    ja["witness_index"] = a.witness_index ? json(*a.witness_index) : json(nullptr);
    put(ja, "witness", a.witness);
    attempts.push_back(std::move(ja));
  }
  json j{{"method", to_string(o.method)}, {"cap", o.cap}, {"found", o.found()}, {"notes", o.notes}};
  j["result"] = o.result ? to_json(*o.result) : json(nullptr);
  put(j, "margin", o.margin);
  put(j, "relative_margin", o.relative_margin);
  j["attempts"] = std::move(attempts);
  return j;
}

json to_json(const ComparisonTable& t) {
  json conditions = json::array();
  for (const ConditionReport& r : t.conditions) conditions.push_back(to_json(r));
  json sigma;
  put(sigma, "rho", t.sigma.rho());
  put(sigma, "a", t.sigma.a());
  put(sigma, "modsq", t.sigma.modsq());
  json j{{"sigma", sigma}, {"conditions", conditions}};
  j["jll_min_dim"] = t.jll_min_dim ? json(*t.jll_min_dim) : json(nullptr);
  j["methods"] = json::array({to_json(t.shifted_companion), to_json(t.laffey), to_json(t.multiblock)});
  return j;
}

}  // namespace niep::cli
