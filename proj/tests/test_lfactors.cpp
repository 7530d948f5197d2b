#include "test_helpers.hpp"
#include "weakdual/lfactors.hpp"
#include "weakdual/sampling.hpp"

using namespace weakdual;

namespace {

GradedSeries ones_minus(long trunc, const std::vector<long>& degrees, long ambient_dim)
{
    GradedSeries s = GradedSeries::one(trunc);
    for (long d : degrees) s = s * (GradedSeries::one(trunc) - GradedSeries::monomial(trunc, d, 1));
    for (long i = 0; i < ambient_dim; ++i) s = s * GradedSeries::geometric(trunc, 1);
    return s;
}

std::vector<long> as_longs(const GradedSeries& s)
{
    std::vector<long> out;
    for (const auto& c : s.coeffs()) out.push_back(to_long_exact(c));
    return out;
}

}  // namespace

TEST_CASE("series arithmetic")
{
    const GradedSeries g = GradedSeries::geometric(6, Q(2));
    CHECK(g[5] == 32);
    CHECK((g * (GradedSeries::one(6) - GradedSeries::monomial(6, 1, 2))) == GradedSeries::one(6));
    CHECK(g.inverse() * g == GradedSeries::one(6));
    CHECK(GradedSeries::geometric(6, Q(1), 3)[3] == 1);
    CHECK(GradedSeries::geometric(6, Q(1), 3)[4] == 0);
    HalfPowerSeries h(4);
    h.add(-1, Q(3));
    h.add(7, Q(1));
    CHECK(h.coeffs().size() == 1);
    CHECK(h.scaled(Q(2), 2).coeff(1) == 6);
}

TEST_CASE("ideal quotient dimensions from explicit generators")
{
    CHECK(ideal_quotient_dimensions("nilcone", 5) == std::vector<long>{1, 8, 35, 111, 286, 637});
    CHECK(ideal_quotient_dimensions("hyperdeterminant", 5) == std::vector<long>{1, 8, 36, 120, 329, 784});
    CHECK_THROWS(ideal_quotient_dimensions("quintic", 3));
}

TEST_CASE("Hilbert series of the singular spaces match their closed forms")
{
    CHECK(hilbert_series(load_case("ginzburg_auto"), 10) == ones_minus(10, {2, 3}, 8));
    CHECK(hilbert_series(load_case("garrett_auto"), 10) == ones_minus(10, {4}, 8));
}

TEST_CASE("garrett_dual degree pieces are the C3 representations k times the third fundamental weight")
{
    CHECK(as_longs(hilbert_series(load_case("garrett_dual"), 6)) == std::vector<long>{1, 14, 84, 330, 1001, 2548, 5712});
}

TEST_CASE("Hilbert series of linear spaces")
{
    CHECK(as_longs(hilbert_series(spectral_space("A3"), 4)) == std::vector<long>{1, 3, 6, 10, 15});
    CHECK(as_longs(hilbert_series(spectral_space("A2xA2"), 4)) == std::vector<long>{1, 4, 10, 20, 35});
    CHECK(as_longs(hilbert_series(spectral_space("rank_one_2x2"), 4)) == std::vector<long>{1, 4, 9, 16, 25});
}

TEST_CASE("character sum over a linear space equals its determinant expansion")
{
    for (const char* name : {"A1", "A2", "A3", "A2xA2"}) {
        const SpectralSpace sp = spectral_space(name);
        for (const auto& s : sample_satake_points(*sp.group, 10, 3))
            CHECK(nonlinear_local_factor(sp, s, 8) == linear_local_factor(standard_eigenvalues(sp, s), 8));
    }
}

TEST_CASE("rank-one tensors: the 2x2 determinant cuts out the cone")
{
    const SpectralSpace sp = spectral_space("rank_one_2x2");
    const SpectralSpace full = spectral_space("A2xA2");
    for (const auto& s : sample_satake_points(*sp.group, 8, 4)) {
        const QVector v = satake_values(*sp.group, s);
        const EvaluatedInvariant det{2, v[0] * v[1] * v[2] * v[3]};
        CHECK(nonlinear_local_factor(sp, s, 8) == lci_local_factor(standard_eigenvalues(full, s), {det}, 8));
    }
}

TEST_CASE("complete-intersection formula for the singular automorphic spaces")
{
    for (const char* name : {"ginzburg_auto", "garrett_auto"}) {
        const CaseData& c = load_case(name);
        const auto pres = lci_presentation(c);
        CHECK(ambient_eigenvalues(c, pres, identity_point(c)).size() == 8);
        for (const auto& s : sample_satake_points(c, 10, 9)) {
            const auto lhs = nonlinear_local_factor(c, s, 8);
            const auto rhs = lci_local_factor(ambient_eigenvalues(c, pres, s), evaluate_invariants(c, pres.invariants, s), 8);
            CHECK(lhs == rhs);
        }
    }
    CHECK_THROWS_AS(lci_presentation(load_case("sl3")), DomainError);
}

TEST_CASE("linear factor input validation")
{
    CHECK_THROWS_AS(linear_local_factor({Q(1), Q(0)}, 3), DomainError);
    CHECK_THROWS_AS(spectral_space("A7"), CatalogError);
    CHECK_THROWS_AS(lci_local_factor({Q(1)}, {{1, Q(1)}}, 3), DomainError);
}

TEST_CASE("memoized characters are shared")
{
    const SpectralSpace sp = spectral_space("garrett_dual");
    CHECK(graded_character(sp, 5) == graded_character(sp, 5));
    CHECK(graded_character(sp, 5)->dimensions() == hilbert_series(sp, 5));
}
