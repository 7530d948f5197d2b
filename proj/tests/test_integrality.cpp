#include "test_helpers.hpp"
#include "weakdual/cones.hpp"
#include "weakdual/integrality.hpp"

using namespace weakdual;

TEST_CASE("identity coset is integral exactly when t is")
{
    const CaseData& c = load_case("ginzburg_auto");
    const CoweightVector zero = ginzburg_cocharacter(0, 0, 0);
    CHECK(is_integral(c, {zero, 0}));
    CHECK(is_integral(c, {zero, 3}));
    CHECK(is_integral(c, {zero, std::nullopt}));
    CHECK_FALSE(is_integral(c, {zero, -1}));
    CHECK(ginzburg_matrix_oracle(0, 0, 0, 0));
    CHECK_FALSE(ginzburg_matrix_oracle(0, 0, 0, -1));
}

TEST_CASE("hand-checked Ginzburg points")
{
    // diag(ϖ², ϖ, 1) × ϖ³: valuations of e12, e13, e23 are 2, 1 + v_t, 2.
    CHECK(ginzburg_matrix_oracle(2, 1, 3, -1));
    CHECK_FALSE(ginzburg_matrix_oracle(2, 1, 3, -2));
    CHECK(is_integral(load_case("ginzburg_auto"), {ginzburg_cocharacter(2, 1, 3), -1}));
    CHECK_FALSE(is_integral(load_case("ginzburg_auto"), {ginzburg_cocharacter(2, 1, 3), -2}));
    // c < b makes the e23 entry non-integral whatever t is.
    CHECK_FALSE(ginzburg_matrix_oracle(0, 1, 0, std::nullopt));
    CHECK_FALSE(is_integral(load_case("ginzburg_auto"), {ginzburg_cocharacter(0, 1, 0), std::nullopt}));
}

TEST_CASE("Garrett exponents need 3 | a + b")
{
    CHECK(garrett_exponents_admissible({1, 1, 1, 0, 0, 0}));
    CHECK_FALSE(garrett_exponents_admissible({1, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(garrett_cocharacter({1, 0, 0, 0, 0, 0}), DomainError);
    CHECK_THROWS_AS(garrett_tensor_oracle({1, 0, 0, 0, 0, 0}, 0), DomainError);
}

TEST_CASE("hand-checked Garrett points")
{
    const CaseData& c = load_case("garrett_auto");
    // ϖ on every factor: e221, e212, e122 have valuation 1 and e222 has 1 + v_t.
    const GarrettExponents central{1, 1, 1, 1, 1, 1};
    CHECK(garrett_tensor_oracle(central, -1));
    CHECK_FALSE(garrett_tensor_oracle(central, -2));
    CHECK(is_integral(c, {garrett_cocharacter(central), -1}));
    CHECK_FALSE(is_integral(c, {garrett_cocharacter(central), -2}));
    const GarrettExponents lopsided{3, 0, 0, 0, 0, 0};
    CHECK_FALSE(garrett_tensor_oracle(lopsided, std::nullopt));
    CHECK_FALSE(is_integral(c, {garrett_cocharacter(lopsided), std::nullopt}));
}

TEST_CASE("exhaustive agreement on small grids")
{
    const auto g = oracle_agreement_report("ginzburg", 3, -4, 4);
    CHECK(g.grid_size == 7 * 7 * 7 * 10);
    CHECK(g.disagreements.empty());
    CHECK(g.integral_points > 0);
    const auto h = oracle_agreement_report("garrett_auto", 2, -3, 3);
    CHECK(h.disagreements.empty());
    CHECK(h.integral_points > 0);
    CHECK(h.grid_size % 8 == 0);
}

TEST_CASE("empty and unknown grids")
{
    CHECK(oracle_agreement_report("ginzburg", -1, 0, 0).grid_size == 0);
    CHECK(oracle_agreement_report("ginzburg", 2, 3, 1).grid_size == 0);
    CHECK_THROWS_AS(oracle_agreement_report("sl3", 2, 0, 1), CatalogError);
}

TEST_CASE("automorphic bounds are the torus inequalities plus a nonnegative v_t threshold")
{
    for (const char* n : {"ginzburg_auto", "garrett_auto"}) {
        const CaseData& c = load_case(n);
        long hits = 0;
        std::vector<long> x(c.rank, -3);
        for (;;) {
            CoweightVector chi = CoweightVector::zero(c.rank);
            for (std::size_t i = 0; i < c.rank; ++i)
                chi = chi + Rational(x[i]) * CoweightVector(c.coweight_lattice_basis.column(i));
            if (is_dominant(c, chi)) {
                const auto t = torus_integrality(c, chi);
                const bool bounds = satisfies_automorphic_bounds(c, chi);
                CHECK(bounds == (t.torus_ok && t.min_v_t >= 0));
                if (bounds) ++hits;
            }
            std::size_t i = 0;
            while (i < x.size() && x[i] == 3) x[i++] = -3;
            if (i == x.size()) break;
            ++x[i];
        }
        CHECK(hits > 1);
    }
}

TEST_CASE("no criterion for cases without theta")
{
    CHECK_THROWS_AS(torus_integrality(load_case("sl3"), CoweightVector::zero(2)), DomainError);
}
