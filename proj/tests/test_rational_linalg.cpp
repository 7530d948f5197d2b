#include "test_helpers.hpp"
#include "weakdual/linalg.hpp"
#include "weakdual/sampling.hpp"

using namespace weakdual;

TEST_CASE("rational parsing and canonical printing")
{
    CHECK(parse_rational("6/4") == Q(3, 2));
    CHECK(parse_rational(" -7 ") == Q(-7));
    CHECK_THROWS_AS(parse_rational("3/-6"), DomainError);
    CHECK(to_string(Q(-6, 4)) == "-3/2");
    CHECK(to_string(Q(8, 4)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("floor, ceil and integer conversion")
{
    CHECK(floor_of(Q(-1, 2)) == -1);
    CHECK(ceil_of(Q(-1, 2)) == 0);
    CHECK(floor_of(Q(7, 3)) == 2);
    CHECK(to_long_exact(Q(12, 4)) == 3);
    CHECK_THROWS(to_long_exact(Q(1, 3)));
}

TEST_CASE("power handles negative exponents")
{
    CHECK(power(Q(2, 3), 3) == Q(8, 27));
    CHECK(power(Q(2, 3), -2) == Q(9, 4));
    CHECK(power(Q(5), 0) == 1);
    CHECK_THROWS_AS(power(Q(0), -1), DomainError);
}

TEST_CASE("inverse of random integer matrices")
{
    RationalSampler rng(7);
    int tested = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        QMatrix A(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) A(i, j) = rng.nonzero_rational();
        if (determinant(A) == 0) {
            CHECK_THROWS_AS(inverse(A), DomainError);
            continue;
        }
        ++tested;
        CHECK(A * inverse(A) == QMatrix::identity(n));
        CHECK(determinant(A) * determinant(inverse(A)) == 1);
        CHECK(rank(A) == n);
    }
    CHECK(tested > 20);
}

TEST_CASE("singular systems")
{
    const QMatrix A = QMatrix::from_rows({{Q(1), Q(2)}, {Q(2), Q(4)}});
    CHECK(rank(A) == 1);
    CHECK(determinant(A) == 0);
    CHECK_FALSE(solve(A, {Q(1), Q(0)}).has_value());
    CHECK_THROWS_AS(inverse(A), DomainError);
}

TEST_CASE("vector ordering is lexicographic")
{
    CHECK(compare_vectors({Q(1), Q(2)}, {Q(1), Q(3)}) == std::strong_ordering::less);
    CHECK(compare_vectors({Q(2)}, {Q(2)}) == std::strong_ordering::equal);
}
