#include "weakdual/root_data.hpp"

#include <initializer_list>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace weakdual {

namespace {

QVector v(std::initializer_list<const char*> xs)
{
    QVector out;
    for (const char* x : xs) out.push_back(parse_rational(x));
    return out;
}

QMatrix m(std::initializer_list<std::initializer_list<const char*>> rows)
{
    std::vector<QVector> rs;
    for (auto r : rows) rs.push_back(v(r));
    return QMatrix::from_rows(rs);
}

const std::vector<std::vector<long>> kA2{{2, -1}, {-1, 2}};
const std::vector<std::vector<long>> kA1x3{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};

// Coordinates: weights as (⟨λ,α̌_1⟩, ⟨λ,α̌_2⟩, ⟨λ,θ̌⟩); coweights on (α̌_1, α̌_2, θ̌).
CaseSpec ginzburg_common()
{
    CaseSpec s;
    s.rank = 3;
    s.pairing = QMatrix::identity(3);
    s.cartan = kA2;
    s.simple_roots = {v({"2", "-1", "0"}), v({"-1", "2", "0"})};
    s.simple_coroots = {v({"1", "0", "0"}), v({"0", "1", "0"})};
    s.theta = v({"0", "0", "1"});
    s.theta_check = v({"0", "0", "1"});
    s.minus_w0 = m({{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "-1"}});
    s.duality_map = m({{"2", "-1", "0"}, {"-1", "2", "0"}, {"0", "0", "1"}});
    s.satake_has_gm = true;
    s.model = SemisimpleModel::a2;
    s.convex_hull_simplification = true;
    return s;
}

CaseSpec ginzburg_auto()
{
    CaseSpec s = ginzburg_common();
    s.name = "ginzburg_auto";
    s.description = "PGL3 x Gm acting on the nilpotent cone of sl3 twisted by the scaling character";
    s.lattice_basis = {v({"2", "-1", "0"}), v({"-1", "2", "0"}), v({"0", "0", "1"})};
    s.dual_case = "ginzburg_dual";
    return s;
}

CaseSpec ginzburg_dual()
{
    CaseSpec s = ginzburg_common();
    s.name = "ginzburg_dual";
    s.description = "SL3 x Gm, spectral side of the nilcone pair";
    s.lattice_basis = {v({"1", "0", "0"}), v({"-1", "1", "0"}), v({"0", "0", "1"})};
    s.dual_case = "ginzburg_auto";
    return s;
}

// Coordinates: weights as (⟨λ,α̌_i⟩)_{i≤3} then ⟨λ,θ̌⟩; simple roots are 2ϖ_i.
CaseSpec garrett_common()
{
    CaseSpec s;
    s.rank = 4;
    s.pairing = QMatrix::identity(4);
    s.cartan = kA1x3;
    s.simple_roots = {v({"2", "0", "0", "0"}), v({"0", "2", "0", "0"}), v({"0", "0", "2", "0"})};
    s.simple_coroots = {v({"1", "0", "0", "0"}), v({"0", "1", "0", "0"}), v({"0", "0", "1", "0"})};
    s.theta = v({"0", "0", "0", "1"});
    s.theta_check = v({"0", "0", "0", "1"});
    s.minus_w0 = m({{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "-1"}});
    s.duality_map = m({{"2", "0", "0", "0"}, {"0", "2", "0", "0"}, {"0", "0", "2", "0"}, {"0", "0", "0", "1/2"}});
    s.satake_has_gm = true;
    s.model = SemisimpleModel::a1_cubed;
    s.convex_hull_simplification = true;
    return s;
}

CaseSpec garrett_auto()
{
    CaseSpec s = garrett_common();
    s.name = "garrett_auto";
    s.description = "(SL2^3 x Gm)/mu2 acting on the hyperdeterminant locus in 2x2x2 tensors";
    s.lattice_basis = {v({"1", "1", "1", "1/2"}), v({"2", "0", "0", "0"}), v({"0", "2", "0", "0"}),
                       v({"0", "0", "0", "1"})};
    s.dual_case = "garrett_dual";
    return s;
}

CaseSpec garrett_dual()
{
    CaseSpec s = garrett_common();
    s.name = "garrett_dual";
    s.description = "GL2^3 with equal determinants, spectral side acting on the cone over LGr(3,6)";
    s.lattice_basis = {v({"1", "0", "0", "1/2"}), v({"0", "1", "0", "1/2"}), v({"0", "0", "1", "1/2"}),
                       v({"0", "0", "0", "1"})};
    s.dual_case = "garrett_auto";
    return s;
}

CaseSpec gl1()
{
    CaseSpec s;
    s.name = "gl1";
    s.description = "GL1, the Tate auxiliary";
    s.rank = 1;
    s.pairing = QMatrix::identity(1);
    s.theta = v({"1"});
    s.theta_check = v({"1"});
    s.lattice_basis = {v({"1"})};
    s.minus_w0 = m({{"-1"}});
    s.dual_case = "gl1";
    s.duality_map = QMatrix::identity(1);
    return s;
}

// GL_n in the standard ε coordinates.
CaseSpec gln(std::size_t n)
{
    CaseSpec s;
    s.name = "gl" + std::to_string(n);
    s.description = "GL" + std::to_string(n) + " in standard coordinates";
    s.rank = n;
    s.pairing = QMatrix::identity(n);
    s.cartan.assign(n - 1, std::vector<long>(n - 1, 0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        QVector a(n);
        a[i] = 1;
        a[i + 1] = -1;
        s.simple_roots.push_back(a);
        s.simple_coroots.push_back(a);
        s.cartan[i][i] = 2;
        if (i + 2 < n) s.cartan[i][i + 1] = s.cartan[i + 1][i] = -1;
    }
    s.theta = QVector(n, Rational(1));
    s.theta_check = QVector(n, Rational(1, static_cast<long>(n)));
    QMatrix I = QMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) s.lattice_basis.push_back(I.column(i));
    s.minus_w0 = QMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) s.minus_w0(i, n - 1 - i) = -1;
    s.dual_case = s.name;
    s.duality_map = I;
    return s;
}

CaseSpec sl2()
{
    CaseSpec s;
    s.name = "sl2";
    s.description = "SL2 in fundamental-weight coordinates";
    s.rank = 1;
    s.pairing = QMatrix::identity(1);
    s.cartan = {{2}};
    s.simple_roots = {v({"2"})};
    s.simple_coroots = {v({"1"})};
    s.lattice_basis = {v({"1"})};
    s.minus_w0 = m({{"1"}});
    return s;
}

CaseSpec sl3()
{
    CaseSpec s;
    s.name = "sl3";
    s.description = "SL3 in fundamental-weight coordinates";
    s.rank = 2;
    s.pairing = QMatrix::identity(2);
    s.cartan = kA2;
    s.simple_roots = {v({"2", "-1"}), v({"-1", "2"})};
    s.simple_coroots = {v({"1", "0"}), v({"0", "1"})};
    s.lattice_basis = {v({"1", "0"}), v({"-1", "1"})};
    s.minus_w0 = m({{"0", "1"}, {"1", "0"}});
    return s;
}

CaseSpec sp6()
{
    CaseSpec s;
    s.name = "sp6";
    s.description = "Sp6 in standard coordinates (type C3)";
    s.rank = 3;
    s.pairing = QMatrix::identity(3);
    s.cartan = {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
    s.simple_roots = {v({"1", "-1", "0"}), v({"0", "1", "-1"}), v({"0", "0", "2"})};
    s.simple_coroots = {v({"1", "-1", "0"}), v({"0", "1", "-1"}), v({"0", "0", "1"})};
    s.lattice_basis = {v({"1", "0", "0"}), v({"0", "1", "0"}), v({"0", "0", "1"})};
    s.minus_w0 = QMatrix::identity(3);
    return s;
}

CaseSpec gl2xgl2()
{
    CaseSpec s;
    s.name = "gl2xgl2";
    s.description = "GL2 x GL2 in standard coordinates";
    s.rank = 4;
    s.pairing = QMatrix::identity(4);
    s.cartan = {{2, 0}, {0, 2}};
    s.simple_roots = {v({"1", "-1", "0", "0"}), v({"0", "0", "1", "-1"})};
    s.simple_coroots = s.simple_roots;
    QMatrix I = QMatrix::identity(4);
    for (std::size_t i = 0; i < 4; ++i) s.lattice_basis.push_back(I.column(i));
    s.minus_w0 = m({{"0", "-1", "0", "0"}, {"-1", "0", "0", "0"}, {"0", "0", "0", "-1"}, {"0", "0", "-1", "0"}});
    s.dual_case = "gl2xgl2";
    s.duality_map = I;
    return s;
}

std::map<std::string, CaseData> build_catalog()
{
    std::map<std::string, CaseData> cat;
    for (CaseSpec s : {ginzburg_auto(), ginzburg_dual(), garrett_auto(), garrett_dual(), gl1(), gln(2), gln(3), sl2(),
                       sl3(), sp6(), gl2xgl2()}) {
        std::string key = s.name;
        cat.emplace(key, build_case(std::move(s)));
    }
    validate_duality(cat.at("ginzburg_auto"), cat.at("ginzburg_dual"));
    validate_duality(cat.at("ginzburg_dual"), cat.at("ginzburg_auto"));
    validate_duality(cat.at("garrett_auto"), cat.at("garrett_dual"));
    validate_duality(cat.at("garrett_dual"), cat.at("garrett_auto"));
    return cat;
}

// Map nodes are never erased, so references handed out stay valid.
struct Catalog {
    std::shared_mutex mutex;
    std::map<std::string, CaseData> cases = build_catalog();
};

Catalog& catalog()
{
    static Catalog cat;
    return cat;
}

}  // namespace

const CaseData& load_case(const std::string& name)
{
    auto& cat = catalog();
    std::shared_lock lock(cat.mutex);
    auto it = cat.cases.find(name);
    if (it == cat.cases.end()) throw CatalogError("unknown case '" + name + "'");
    return it->second;
}

const CaseData& register_case(CaseSpec spec)
{
    CaseData c = build_case(std::move(spec));
    auto& cat = catalog();
    std::unique_lock lock(cat.mutex);
    if (cat.cases.contains(c.name)) throw CatalogError("case '" + c.name + "' already exists");
    const std::string key = c.name;
    return cat.cases.emplace(key, std::move(c)).first->second;
}

std::vector<std::string> catalog_names()
{
    auto& cat = catalog();
    std::shared_lock lock(cat.mutex);
    std::vector<std::string> names;
    for (const auto& [k, _] : cat.cases) names.push_back(k);
    return names;
}

}  // namespace weakdual
