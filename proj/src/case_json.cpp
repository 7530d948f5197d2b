#include "weakdual/case_json.hpp"

#include <fstream>

namespace weakdual {

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const QVector& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

Json to_json(const QMatrix& m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw CatalogError(e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw CatalogError("expected a rational string or integer, got " + j.dump());
}

QVector vector_from_json(const Json& j)
{
    if (!j.is_array()) throw CatalogError("expected an array, got " + j.dump());
    QVector v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

QMatrix matrix_from_json(const Json& j)
{
    if (!j.is_array() || j.empty()) throw CatalogError("expected a nonempty array of rows");
    std::vector<QVector> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r));
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw CatalogError("ragged matrix");
    return QMatrix::from_rows(rows);
}

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.contains(key)) throw CatalogError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<QVector> vectors_from_json(const Json& j)
{
    if (!j.is_array()) throw CatalogError("expected an array of vectors");
    std::vector<QVector> out;
    for (const auto& x : j) out.push_back(vector_from_json(x));
    return out;
}

Json vectors_to_json(const std::vector<QVector>& vs)
{
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

SemisimpleModel model_from_string(const std::string& s)
{
    if (s == "none") return SemisimpleModel::none;
    if (s == "a2") return SemisimpleModel::a2;
    if (s == "a1_cubed") return SemisimpleModel::a1_cubed;
    throw CatalogError("unknown model '" + s + "'");
}

const char* model_name(SemisimpleModel m)
{
    switch (m) {
    case SemisimpleModel::a2: return "a2";
    case SemisimpleModel::a1_cubed: return "a1_cubed";
    default: return "none";
    }
}

}  // namespace

CaseSpec case_spec_from_json(const Json& j)
{
    if (!j.is_object()) throw CatalogError("case description must be an object");
    if (j.value("schema_version", 0) != kSchemaVersion)
        throw CatalogError("unsupported schema_version " + j.value("schema_version", Json()).dump());
    try {
        CaseSpec s;
        s.name = field(j, "name").get<std::string>();
        s.description = j.value("description", "");
        s.rank = field(j, "rank").get<std::size_t>();
        s.pairing = j.contains("pairing") ? matrix_from_json(j["pairing"]) : QMatrix::identity(s.rank);
        s.cartan = j.value("cartan", std::vector<std::vector<long>>{});
        s.simple_roots = vectors_from_json(j.value("simple_roots", Json::array()));
        s.simple_coroots = vectors_from_json(j.value("simple_coroots", Json::array()));
        if (j.contains("theta")) s.theta = vector_from_json(j["theta"]);
        if (j.contains("theta_check")) s.theta_check = vector_from_json(j["theta_check"]);
        s.lattice_basis = vectors_from_json(field(j, "lattice_basis"));
        s.minus_w0 = matrix_from_json(field(j, "minus_w0"));
        s.dual_case = j.value("dual_case", "");
        if (j.contains("duality_map")) s.duality_map = matrix_from_json(j["duality_map"]);
        s.satake_has_gm = j.value("satake_has_gm", false);
        s.model = model_from_string(j.value("model", "none"));
        s.convex_hull_simplification = j.value("convex_hull_simplification", false);
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw CatalogError(std::string("malformed case description: ") + e.what());
    }
}

Json case_spec_to_json(const CaseSpec& s)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = s.name;
    j["description"] = s.description;
    j["rank"] = s.rank;
    j["pairing"] = to_json(s.pairing);
    j["cartan"] = s.cartan;
    j["simple_roots"] = vectors_to_json(s.simple_roots);
    j["simple_coroots"] = vectors_to_json(s.simple_coroots);
    if (s.theta) j["theta"] = to_json(*s.theta);
    if (s.theta_check) j["theta_check"] = to_json(*s.theta_check);
    j["lattice_basis"] = vectors_to_json(s.lattice_basis);
    j["minus_w0"] = to_json(s.minus_w0);
    if (!s.dual_case.empty()) j["dual_case"] = s.dual_case;
    if (s.duality_map) j["duality_map"] = to_json(*s.duality_map);
    j["satake_has_gm"] = s.satake_has_gm;
    j["model"] = model_name(s.model);
    j["convex_hull_simplification"] = s.convex_hull_simplification;
    return j;
}

const CaseData& load_case_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw CatalogError(path.string() + ": " + e.what());
    }
    return register_case(case_spec_from_json(j));
}

Json multiplicity_table_to_json(const CaseData& c, const MultiplicityTable& t)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["case"] = c.name;
    j["highest_weight"] = to_json(t.highest_weight.coords());
    j["dimension"] = t.dimension();
    Json entries = Json::array();
    for (const auto& [w, mult] : t.entries) entries.push_back({{"weight", to_json(w.coords())}, {"multiplicity", mult}});
    j["weights"] = std::move(entries);
    return j;
}

Json satake_to_json(const SatakePoint& s)
{
    Json j;
    j["semisimple"] = to_json(s.semisimple);
    if (s.gm) j["gm"] = to_string(*s.gm);
    if (!s.label.empty()) j["label"] = s.label;
    return j;
}

SatakePoint satake_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("semisimple")) throw CatalogError("Satake point needs a 'semisimple' array");
    SatakePoint s;
    s.semisimple = vector_from_json(j["semisimple"]);
    if (j.contains("gm")) s.gm = rational_from_json(j["gm"]);
    s.label = j.value("label", "");
    return s;
}

}  // namespace weakdual
