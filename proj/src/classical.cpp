#include "weakdual/classical.hpp"

#include "weakdual/lfactors.hpp"

namespace weakdual {

namespace {

long dim_unipotent(const CaseData& c) { return static_cast<long>(c.positive_roots.size()); }

}  // namespace

GradedSeries tate_local_factor(const Rational& chi_value, long trunc)
{
    if (chi_value == 0) throw DomainError("chi_value must be nonzero");
    return GradedSeries::geometric(trunc, chi_value);
}

UPowerValue casselman_shalika_value(const CaseData& c, const CoweightVector& chi, const SatakePoint& s, long m)
{
    if (!is_dominant(c, chi)) throw DomainError("chi must be dominant");
    if (c.dual_case.empty()) throw DomainError("case '" + c.name + "' has no dual");
    const CoweightVector shifted = chi + Rational(2 * m) * c.rho_check;
    const Rational e = -2 * pair(c, c.rho, shifted);
    if (!is_integer(e)) throw DomainError("half-integral u-exponent");
    const CaseData& dual = load_case(c.dual_case);
    return {character_value(dual, duality_image(c, shifted), s), to_long_exact(e)};
}

GL2Satake::GL2Satake(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b))
{
    if (alpha == 0 || beta == 0) throw DomainError("GL2 Satake entries must be nonzero");
}

SatakePoint GL2Satake::point() const { return {{alpha, beta}, std::nullopt, "gl2(" + to_string(alpha) + "," + to_string(beta) + ")"}; }

HeckeVerdict hecke_local_factor(const GL2Satake& s, long m, long trunc)
{
    if (trunc < 0) throw DomainError("truncation order must be nonnegative");
    if (m < 0) throw DomainError("m must be nonnegative");
    const CaseData& gl2 = load_case("gl2");
    const SatakePoint p = s.point();
    HeckeVerdict v;
    v.period_side = HalfPowerSeries(trunc);
    // α starts at −2m: the terms below α = 0 are what the central twist absorbs.
    for (long alpha = -2 * m; alpha + 2 * m <= trunc; ++alpha) {
        const WeightVector w(QVector{Rational(alpha + m), Rational(-m)});
        v.period_side.add(alpha + 2 * m, character_value(gl2, w, p));
    }
    const GradedSeries l = linear_local_factor({s.alpha, s.beta}, trunc);
    v.l_function_side = HalfPowerSeries::from_graded(l).scaled(power(s.det(), -m), 0);
    v.first_difference = v.period_side.first_difference(v.l_function_side);
    v.equal = !v.first_difference;
    return v;
}

RankinSelbergVerdict rankin_selberg_check(const GL2Satake& A, const GL2Satake& B, long trunc)
{
    if (trunc < 0) throw DomainError("truncation order must be nonnegative");
    const CaseData& gl2 = load_case("gl2");
    RankinSelbergVerdict v;
    GradedSeries diag(trunc);
    for (long k = 0; k <= trunc; ++k) {
        const WeightVector w(QVector{Rational(k), Rational(0)});
        diag[k] = character_value(gl2, w, A.point()) * character_value(gl2, w, B.point());
    }
    v.lhs = diag * GradedSeries::geometric(trunc, A.det() * B.det(), 2);
    v.rhs = linear_local_factor({A.alpha * B.alpha, A.alpha * B.beta, A.beta * B.alpha, A.beta * B.beta}, trunc);
    v.first_difference = v.lhs.first_difference(v.rhs);
    v.equal = !v.first_difference;
    return v;
}

Rational whittaker_beta(const CaseData& c, long genus)
{
    return Rational(genus - 1) * (dim_unipotent(c) - 4 * pair(c, c.rho, c.rho_check));
}

Rational whittaker_delta_exponent(const CaseData& c)
{
    return pair(c, c.rho, c.rho_check) - make_rational(dim_unipotent(c), 4);
}

}  // namespace weakdual
