#include "test_helpers.hpp"
#include "weakdual/cones.hpp"
#include "weakdual/linalg.hpp"
#include "weakdual/rep_theory.hpp"
#include "weakdual/sampling.hpp"

#include <numeric>

using namespace weakdual;

namespace {

// Schur polynomial as a ratio of alternants: det(x_i^{λ_j + n − j}) / det(x_i^{n − j}).
Rational bialternant(const std::vector<long>& lambda, const QVector& x)
{
    const std::size_t n = x.size();
    QMatrix num(n, n), den(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            num(i, j) = power(x[i], lambda[j] + static_cast<long>(n - 1 - j));
            den(i, j) = power(x[i], static_cast<long>(n - 1 - j));
        }
    return determinant(num) / determinant(den);
}

// Weyl's product over the positive coroots of C3 in standard coordinates.
Integer c3_dimension(const std::vector<long>& lambda)
{
    const long rho[3] = {3, 2, 1};
    Rational num = 1, den = 1;
    for (int i = 0; i < 3; ++i) {
        num *= lambda[i] + rho[i];
        den *= rho[i];
        for (int j = i + 1; j < 3; ++j) {
            num *= (lambda[i] + rho[i] - lambda[j] - rho[j]) * (lambda[i] + rho[i] + lambda[j] + rho[j]);
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
        }
    }
    const Rational d = num / den;
    REQUIRE(is_integer(d));
    return d.get_num();
}

WeightVector wv(std::initializer_list<long> xs)
{
    QVector v;
    for (long x : xs) v.emplace_back(x);
    return WeightVector(v);
}

}  // namespace

TEST_CASE("GL3 characters match the bialternant at distinct points")
{
    const CaseData& c = load_case("gl3");
    const auto pts = sample_satake_points(c, 12, 11);
    int used = 0;
    for (const auto& s : pts) {
        const auto& x = s.semisimple;
        if (x[0] == x[1] || x[1] == x[2] || x[0] == x[2]) continue;
        ++used;
        for (const std::vector<long>& lam : {std::vector<long>{0, 0, 0}, {1, 0, 0}, {2, 1, 0}, {3, 1, -2}, {4, 4, 1}}) {
            const WeightVector w(QVector{Q(lam[0]), Q(lam[1]), Q(lam[2])});
            CHECK(character_value(c, w, s) == bialternant(lam, x));
        }
    }
    CHECK(used >= 8);
}

TEST_CASE("GL2 characters are complete homogeneous sums")
{
    const CaseData& c = load_case("gl2");
    const SatakePoint s{{Q(2), Q(-1, 3)}, std::nullopt, ""};
    for (long k = 0; k <= 6; ++k) {
        Rational h = 0;
        for (long i = 0; i <= k; ++i) h += power(Q(2), i) * power(Q(-1, 3), k - i);
        CHECK(character_value(c, wv({k, 0}), s) == h);
    }
}

TEST_CASE("C3 dimensions agree with the product formula")
{
    const CaseData& c = load_case("sp6");
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long d = 0; d <= 3; ++d) {
                const std::vector<long> lam{a + b + d, b + d, d};
                const WeightVector w = wv({lam[0], lam[1], lam[2]});
                const Integer expected = c3_dimension(lam);
                CHECK(weyl_dimension(c, w) == expected);
                CHECK(weight_multiplicities(c, w)->dimension() == expected);
            }
    CHECK(weyl_dimension(c, c.fundamental_weights[2]) == 14);
}

TEST_CASE("multiplicities are Weyl invariant and sum to the dimension")
{
    for (const char* n : {"sl3", "sp6", "ginzburg_dual", "garrett_dual"}) {
        const CaseData& c = load_case(n);
        const WeightVector lam = Rational(2) * c.rho;
        const auto t = weight_multiplicities(c, lam);
        long total = 0;
        for (const auto& [mu, m] : t->entries) {
            total += m;
            for (std::size_t i = 0; i < c.semisimple_rank(); ++i) {
                auto it = t->entries.find(reflect(c, i, mu));
                REQUIRE(it != t->entries.end());
                CHECK(it->second == m);
            }
        }
        CHECK(Integer(total) == weyl_dimension(c, lam));
    }
}

TEST_CASE("adjoint of sl3 has zero weight with multiplicity two")
{
    const CaseData& c = load_case("sl3");
    const auto t = weight_multiplicities(c, c.fundamental_weights[0] + c.fundamental_weights[1]);
    CHECK(t->dimension() == 8);
    CHECK(t->entries.at(WeightVector::zero(c.rank)) == 2);
}

TEST_CASE("characters vanish off the dominant chamber and are 1 at zero")
{
    const CaseData& c = load_case("gl3");
    const auto s = sample_satake_points(c, 3, 5).back();
    CHECK(character_value(c, wv({0, 1, 0}), s) == 0);
    CHECK(character_value(c, wv({0, 0, 0}), s) == 1);
}

TEST_CASE("character value at the identity is the dimension")
{
    for (const char* n : {"ginzburg_dual", "garrett_dual", "sp6"}) {
        const CaseData& c = load_case(n);
        const WeightVector lam = c.fundamental_weights.back() + c.fundamental_weights.front();
        if (!is_lattice(c, lam)) continue;
        CHECK(character_value(c, lam, identity_point(c)) == Rational(weyl_dimension(c, lam)));
    }
}

TEST_CASE("Satake points are validated")
{
    const CaseData& c = load_case("ginzburg_dual");
    SatakePoint s = identity_point(c);
    s.semisimple.push_back(1);
    CHECK_THROWS_AS(satake_values(c, s), DimensionError);
    SatakePoint z = identity_point(c);
    z.semisimple[0] = 0;
    CHECK_THROWS_AS(satake_values(c, z), DomainError);
}

TEST_CASE("Laurent polynomial arithmetic")
{
    LaurentPolynomial p;
    p.add_term({1, -1}, 3);
    p.add_term({1, -1}, -3);
    CHECK(p.terms().empty());
    p.add_term({2, 0}, 1);
    p.add_term({0, -1}, 2);
    CHECK(p.evaluate({Q(3), Q(1, 2)}) == 13);
    CHECK(p.value_at_one() == 3);
}

TEST_CASE("brute-force invariants on small weights")
{
    const CaseData& c = load_case("ginzburg_dual");
    CHECK(invariant_dimension_bruteforce(c, WeightVector::zero(c.rank)) == 1);
    const auto rel = enumerate_relevant(c, 2);
    for (const auto& w : rel.by_degree.at(2)) {
        CHECK(invariant_dimension_bruteforce(c, w, InvariantModel::primary) == 1);
        CHECK(invariant_dimension_bruteforce(c, w, InvariantModel::alternate) == 1);
    }
    const CaseData& g = load_case("garrett_dual");
    const auto grel = enumerate_relevant(g, 2);
    for (const auto& w : grel.by_degree.at(1))
        CHECK(invariant_dimension_bruteforce(g, w, InvariantModel::alternate) == 1);
}

TEST_CASE("brute force refuses unsupported inputs")
{
    CHECK_THROWS_AS(invariant_dimension_bruteforce(load_case("sl3"), wv({1, 0})), DomainError);
    const CaseData& c = load_case("ginzburg_dual");
    const auto top = enumerate_relevant(c, 5);
    const WeightVector big = top.by_degree.at(5).front();
    CHECK_THROWS_AS(invariant_dimension_bruteforce(c, big), CapacityError);
}
