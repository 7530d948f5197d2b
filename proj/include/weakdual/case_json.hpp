#pragma once

#include "weakdual/rep_theory.hpp"
#include "weakdual/root_data.hpp"

#include <json.hpp>

#include <filesystem>

namespace weakdual {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const QVector& v);
Json to_json(const QMatrix& m);
Rational rational_from_json(const Json& j);
QVector vector_from_json(const Json& j);
QMatrix matrix_from_json(const Json& j);

// Case description files; see README for the schema. CatalogError on malformed input.
CaseSpec case_spec_from_json(const Json& j);
Json case_spec_to_json(const CaseSpec& s);
const CaseData& load_case_file(const std::filesystem::path& path);

Json multiplicity_table_to_json(const CaseData& c, const MultiplicityTable& t);
Json satake_to_json(const SatakePoint& s);
SatakePoint satake_from_json(const Json& j);

}  // namespace weakdual
