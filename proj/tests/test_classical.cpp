#include "test_helpers.hpp"
#include "weakdual/classical.hpp"
#include "weakdual/lfactors.hpp"
#include "weakdual/sampling.hpp"

using namespace weakdual;

TEST_CASE("Tate factor")
{
    const auto one = tate_local_factor(Q(1), 6);
    for (long d = 0; d <= 6; ++d) CHECK(one[d] == 1);
    for (const auto& chi : sample_rationals(10, 3)) {
        const auto t = tate_local_factor(chi, 8);
        CHECK(t == linear_local_factor({chi}, 8));
        CHECK(t == nonlinear_local_factor(spectral_space("A1"), SatakePoint{{chi}, std::nullopt, ""}, 8));
        CHECK(t[5] == power(chi, 5));
    }
    CHECK_THROWS_AS(tate_local_factor(Q(0), 3), DomainError);
}

TEST_CASE("Casselman-Shalika values")
{
    const CaseData& gl2 = load_case("gl2");
    const SatakePoint s{{Q(3), Q(1, 2)}, std::nullopt, ""};
    const auto zero = casselman_shalika_value(gl2, CoweightVector::zero(2), s, 0);
    CHECK(zero.value == 1);
    CHECK(zero.u_exponent == 0);
    for (long k = 0; k <= 5; ++k) {
        const auto v = casselman_shalika_value(gl2, CoweightVector(QVector{Q(k), Q(0)}), s, 0);
        Rational h = 0;
        for (long i = 0; i <= k; ++i) h += power(Q(3), i) * power(Q(1, 2), k - i);
        CHECK(v.value == h);
        CHECK(v.u_exponent == -k);
    }
    // With m = 1 the shift by 2ρ̌ = (1, −1) adds 2 to the u-exponent magnitude.
    const auto shifted = casselman_shalika_value(gl2, CoweightVector(QVector{Q(1), Q(0)}), s, 1);
    CHECK(shifted.u_exponent == -3);
    CHECK(shifted.value == character_value(gl2, WeightVector(QVector{Q(2), Q(-1)}), s));
    CHECK_THROWS_AS(casselman_shalika_value(gl2, CoweightVector(QVector{Q(0), Q(1)}), s, 0), DomainError);
}

TEST_CASE("Casselman-Shalika vanishes when the shift leaves the chamber")
{
    const CaseData& gl2 = load_case("gl2");
    // m = −1 moves (0, 0) to (−1, 1), which is not dominant.
    const auto v = casselman_shalika_value(gl2, CoweightVector::zero(2), {{Q(2), Q(5)}, std::nullopt, ""}, -1);
    CHECK(v.value == 0);
}

TEST_CASE("Hecke period factor")
{
    for (long m = 0; m <= 2; ++m)
        for (const auto& s : sample_gl2(20, 40 + m, false)) CHECK(hecke_local_factor(s, m, 12).equal);
    for (const auto& s : sample_gl2(5, 9, true)) {
        const auto v = hecke_local_factor(s, 1, 10);
        CHECK(s.det() == 1);
        CHECK(v.equal);
    }
    const auto trivial = hecke_local_factor(GL2Satake(Q(2), Q(3)), 0, 0);
    CHECK(trivial.period_side.coeff(0) == 1);
    CHECK(trivial.l_function_side.coeff(0) == 1);
    CHECK_THROWS_AS(GL2Satake(Q(0), Q(1)), DomainError);
}

TEST_CASE("Rankin-Selberg identity for unimodular pairs")
{
    const auto as = sample_gl2(10, 1, true);
    const auto bs = sample_gl2(10, 2, true);
    for (std::size_t i = 0; i < as.size(); ++i) CHECK(rankin_selberg_check(as[i], bs[i], 10).equal);
    for (const auto& a : sample_gl2(5, 3, false)) CHECK(rankin_selberg_check(a, GL2Satake(Q(3), Q(-1, 2)), 8).equal);
}

TEST_CASE("Whittaker normalization constant")
{
    for (long g : {0L, 1L, 2L, 7L}) {
        CHECK(whittaker_beta(load_case("sl2"), g) == -(g - 1));
        CHECK(whittaker_beta(load_case("sl3"), g) == -5 * (g - 1));
    }
    for (const auto& n : catalog_names()) {
        const CaseData& c = load_case(n);
        CHECK(whittaker_beta(c, 1) == 0);
        CHECK(whittaker_beta(c, 4) == -4 * 3 * whittaker_delta_exponent(c));
    }
}
