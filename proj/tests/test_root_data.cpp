#include "test_helpers.hpp"
#include "weakdual/case_json.hpp"
#include "weakdual/root_data.hpp"

using namespace weakdual;

namespace {

const char* const kAllCases[] = {"ginzburg_auto", "ginzburg_dual", "garrett_auto", "garrett_dual", "gl1", "gl2",
                                 "gl3", "sl2", "sl3", "sp6", "gl2xgl2"};

}  // namespace

TEST_CASE("catalog lists every built-in case")
{
    const auto names = catalog_names();
    for (const char* n : kAllCases) CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK_THROWS_AS(load_case("e8"), CatalogError);
}

TEST_CASE("constants of the two singular pairs")
{
    for (const char* n : {"ginzburg_auto", "ginzburg_dual"}) {
        const auto& k = *load_case(n).constants;
        CHECK(k.a == 2);
        CHECK(k.gamma == 1);
        CHECK(k.gimel == Q(3, 2));
        CHECK(k.discrepancy_exponent == 3);
    }
    for (const char* n : {"garrett_auto", "garrett_dual"}) {
        const auto& k = *load_case(n).constants;
        CHECK(k.a == Q(3, 2));
        CHECK(k.gamma == 2);
        CHECK(k.gimel == 0);
        CHECK(k.discrepancy_exponent == 3);
    }
    const auto& g = *load_case("ginzburg_auto").constants;
    CHECK(g.dim_G == 9);
    CHECK(g.dim_U == 3);
    const auto& h = *load_case("garrett_auto").constants;
    CHECK(h.dim_G == 10);
    CHECK(h.dim_U == 3);
    CHECK(h.epsilon == 4);
}

TEST_CASE("gamma (a - 1) = 1 and gimel closed form")
{
    for (const char* n : {"ginzburg_auto", "ginzburg_dual", "garrett_auto", "garrett_dual"}) {
        const auto& k = *load_case(n).constants;
        CHECK(k.gamma * (k.a - 1) == 1);
        CHECK(k.gimel == (2 * k.a - 1) * (1 - k.gamma / 2));
    }
}

TEST_CASE("pairing of roots with their coroots")
{
    for (const char* n : kAllCases) {
        const CaseData& c = load_case(n);
        for (std::size_t i = 0; i < c.positive_root_vectors.size(); ++i)
            CHECK(pair(c, c.positive_root_vectors[i], c.positive_coroots[i]) == 2);
        for (std::size_t i = 0; i < c.semisimple_rank(); ++i) {
            CHECK(pair(c, c.rho, c.simple_coroots[i]) == 1);
            CHECK(pair(c, c.simple_roots[i], c.rho_check) == 1);
            for (std::size_t j = 0; j < c.semisimple_rank(); ++j)
                CHECK(pair(c, c.simple_roots[i], c.simple_coroots[j]) == c.cartan[i][j]);
        }
    }
}

TEST_CASE("minus w0 is an involution preserving dominance")
{
    for (const char* n : kAllCases) {
        const CaseData& c = load_case(n);
        CHECK(c.minus_w0 * c.minus_w0 == QMatrix::identity(c.rank));
        for (const auto& w : c.fundamental_weights) {
            CHECK(is_dominant(c, apply_minus_w0(c, w)));
            CHECK(apply_minus_w0(c, apply_minus_w0(c, w)) == w);
        }
        CHECK(apply_minus_w0(c, c.rho) == c.rho);
    }
}

TEST_CASE("reflections are involutions that preserve the pairing")
{
    for (const char* n : kAllCases) {
        const CaseData& c = load_case(n);
        for (std::size_t i = 0; i < c.semisimple_rank(); ++i)
            for (const auto& w : c.fundamental_weights)
                for (const auto& x : c.fundamental_coweights) {
                    CHECK(reflect(c, i, reflect(c, i, w)) == w);
                    CHECK(pair(c, reflect(c, i, w), reflect(c, i, x)) == pair(c, w, x));
                }
        for (std::size_t i = 0; i < c.semisimple_rank(); ++i)
            CHECK(reflect(c, i, c.simple_roots[i]) == -c.simple_roots[i]);
    }
}

TEST_CASE("positive root counts and rho")
{
    CHECK(load_case("sl2").positive_roots.size() == 1);
    CHECK(load_case("sl3").positive_roots.size() == 3);
    CHECK(load_case("sp6").positive_roots.size() == 9);
    CHECK(load_case("gl2xgl2").positive_roots.size() == 2);
    CHECK(load_case("sp6").rho.coords() == QVector{Q(3), Q(2), Q(1)});
    CHECK(pair(load_case("sl3"), load_case("sl3").rho, load_case("sl3").rho_check) == 2);
}

TEST_CASE("dominant representative")
{
    const CaseData& c = load_case("gl3");
    const WeightVector w(QVector{Q(-1), Q(4), Q(2)});
    CHECK(dominant_representative(c, w).coords() == QVector{Q(4), Q(2), Q(-1)});
}

TEST_CASE("duality map respects the full structure")
{
    CHECK_NOTHROW(validate_duality(load_case("ginzburg_auto"), load_case("ginzburg_dual")));
    CHECK_NOTHROW(validate_duality(load_case("garrett_dual"), load_case("garrett_auto")));
    const CaseData& c = load_case("garrett_auto");
    const CaseData& d = load_case("garrett_dual");
    CHECK(duality_image(c, *c.theta_check) == Rational(1) / c.constants->gamma * *d.theta);
}

TEST_CASE("lattice membership and exponents")
{
    const CaseData& c = load_case("gl2");
    CHECK(is_lattice(c, WeightVector(QVector{Q(2), Q(-1)})));
    CHECK_FALSE(is_lattice(c, WeightVector(QVector{Q(1, 2), Q(0)})));
    CHECK(lattice_exponents(c, WeightVector(QVector{Q(2), Q(-1)})) == std::vector<long>{2, -1});
    CHECK_THROWS_AS(lattice_exponents(c, WeightVector(QVector{Q(1, 2), Q(0)})), DomainError);
}

TEST_CASE("build_case rejects inconsistent data")
{
    CaseSpec s = load_case("sl3").spec;
    s.name = "broken";
    s.cartan[0][1] = -2;
    CHECK_THROWS(build_case(s));

    CaseSpec t = load_case("gl2").spec;
    t.name = "broken2";
    t.minus_w0 = QMatrix::identity(2);
    CHECK_THROWS(build_case(t));

    CaseSpec u = load_case("gl2").spec;
    u.lattice_basis.pop_back();
    CHECK_THROWS(build_case(u));
}

TEST_CASE("case descriptions round-trip through JSON")
{
    for (const char* n : kAllCases) {
        const CaseData& c = load_case(n);
        const Json j = case_spec_to_json(c.spec);
        CHECK(j["schema_version"] == kSchemaVersion);
        const CaseData back = build_case(case_spec_from_json(j));
        CHECK(back.rho == c.rho);
        CHECK(back.pairing == c.pairing);
        CHECK(back.minus_w0 == c.minus_w0);
        CHECK(back.dual_case == c.dual_case);
    }
}

TEST_CASE("JSON cases can be registered once")
{
    Json j = case_spec_to_json(load_case("sl3").spec);
    j["name"] = "sl3_copy";
    const CaseData& c = register_case(case_spec_from_json(j));
    CHECK(&load_case("sl3_copy") == &c);
    CHECK_THROWS_AS(register_case(case_spec_from_json(j)), CatalogError);
    j["schema_version"] = 99;
    CHECK_THROWS_AS(case_spec_from_json(j), CatalogError);
    Json bad = case_spec_to_json(load_case("sl2").spec);
    bad["pairing"] = {{"1", "x"}};
    CHECK_THROWS_AS(case_spec_from_json(bad), CatalogError);
}
