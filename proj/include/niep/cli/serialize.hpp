#pragma once

#include <string>

#include "json.hpp"
#include "niep/compare.hpp"
#include "niep/conditions.hpp"
#include "niep/matrix.hpp"
#include "niep/verification.hpp"

namespace niep::cli {

using nlohmann::json;

/// "rational" or "float<P>"; throws ParseError on anything else.
Backend parse_backend_name(const std::string& name);

/// {dim, backend, entries: [[string]]}. Rational entries are "num/den",
/// Float entries are hexadecimal floats, with a decimal copy in
/// "entries_decimal" for reading only.
json matrix_to_json(const DenseMatrix& m);

/// Inverse of matrix_to_json. Throws BadDimension when dim disagrees with
/// the entries, ParseError for malformed content.
DenseMatrix matrix_from_json(const json& j);

json to_json(const ConditionReport& r);
json to_json(const Certificate& c);
json to_json(const RealizationResult& r);
json to_json(const SearchOutcome& o);
json to_json(const ComparisonTable& t);

}  // namespace niep::cli
