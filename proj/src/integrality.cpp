#include "weakdual/integrality.hpp"

namespace weakdual {

namespace {

bool at_least(const Valuation& v, const Rational& bound) { return !v || Rational(*v) >= bound; }

}  // namespace

TorusIntegrality torus_integrality(const CaseData& c, const CoweightVector& chi)
{
    if (!c.constants || !c.theta) throw DomainError("case '" + c.name + "' has no integrality criterion");
    const Rational am1 = c.constants->a - 1;
    TorusIntegrality r;
    r.torus_ok = true;
    for (std::size_t i = 0; i < c.semisimple_rank(); ++i) {
        if (pair(c, c.n_alpha_check[i] * *c.theta - c.fundamental_weights[i], chi) < 0) r.torus_ok = false;
        if (pair(c, am1 * *c.theta + c.simple_roots[i] - c.rho, chi) < 0) r.torus_ok = false;
    }
    r.min_v_t = pair(c, c.rho - am1 * *c.theta, chi);
    return r;
}

bool is_integral(const CaseData& c, const LocalPoint& p)
{
    const auto t = torus_integrality(c, p.chi);
    return t.torus_ok && at_least(p.v_t, t.min_v_t);
}

CoweightVector ginzburg_cocharacter(long a, long b, long c)
{
    return CoweightVector(QVector{make_rational(2 * a - b, 3), make_rational(a + b, 3), Rational(c)});
}

bool ginzburg_matrix_oracle(long a, long b, long c, Valuation v_t)
{
    // Entry valuations of the conjugated nilpotent representative.
    const bool e12 = c + b - a >= 0;
    const bool e13 = !v_t || *v_t + c - a >= 0;
    const bool e23 = c - b >= 0;
    return e12 && e13 && e23;
}

bool garrett_exponents_admissible(const GarrettExponents& e)
{
    long s = 0;
    for (long x : e) s += x;
    return s % 3 == 0;
}

CoweightVector garrett_cocharacter(const GarrettExponents& e)
{
    if (!garrett_exponents_admissible(e)) throw DomainError("Gm exponent (a+b)/3 is not an integer");
    long s = 0;
    for (long x : e) s += x;
    QVector v;
    for (std::size_t i = 0; i < 3; ++i) v.push_back(make_rational(e[i] - e[3 + i], 2));
    v.push_back(make_rational(s, 3));
    return CoweightVector(v);
}

bool garrett_tensor_oracle(const GarrettExponents& e, Valuation v_t)
{
    if (!garrett_exponents_admissible(e)) throw DomainError("Gm exponent (a+b)/3 is not an integer");
    const long a1 = e[0], a2 = e[1], a3 = e[2], b1 = e[3], b2 = e[4], b3 = e[5];
    const long a = a1 + a2 + a3, b = b1 + b2 + b3;
    const long shift = (a + b) / 3;
    const bool c221 = b1 + b2 + a3 - shift >= 0;
    const bool c212 = b1 + a2 + b3 - shift >= 0;
    const bool c122 = a1 + b2 + b3 - shift >= 0;
    const bool c222 = !v_t || *v_t + b - shift >= 0;
    const bool direct = c221 && c212 && c122 && c222;

    // Condensed form of the same conditions.
    const Rational lhs = make_rational(2 * b - a, 3);
    bool condensed = true;
    for (std::size_t i = 0; i < 3; ++i)
        if (lhs < Rational(e[3 + i] - e[i])) condensed = false;
    if (v_t && Rational(*v_t) < make_rational(a - b, 2) - make_rational(a + b, 6)) condensed = false;
    if (condensed != direct) throw DomainError("tensor oracle: entry valuations disagree with the condensed inequalities");
    return direct;
}

AgreementReport oracle_agreement_report(const std::string& case_name, long bound, long lo, long hi)
{
    const bool ginzburg = case_name == "ginzburg" || case_name == "ginzburg_auto";
    const bool garrett = case_name == "garrett" || case_name == "garrett_auto";
    if (!ginzburg && !garrett) throw CatalogError("no direct integrality oracle for case '" + case_name + "'");
    const CaseData& c = load_case(ginzburg ? "ginzburg_auto" : "garrett_auto");
    AgreementReport rep{c.name, bound, lo, hi, 0, 0, {}};
    if (bound < 0 || lo > hi) return rep;

    std::vector<Valuation> vts;
    for (long v = lo; v <= hi; ++v) vts.emplace_back(v);
    vts.emplace_back(std::nullopt);

    auto compare = [&](const std::vector<long>& ex, const CoweightVector& chi, auto&& oracle) {
        if (!is_lattice(c, chi)) throw DomainError("grid cocharacter outside the lattice");
        const auto t = torus_integrality(c, chi);
        for (const auto& v : vts) {
            const bool crit = t.torus_ok && at_least(v, t.min_v_t);
            const bool orc = oracle(v);
            ++rep.grid_size;
            if (crit) ++rep.integral_points;
            if (crit != orc) rep.disagreements.push_back({ex, v, crit, orc});
        }
    };

    if (ginzburg) {
        for (long a = -bound; a <= bound; ++a)
            for (long b = -bound; b <= bound; ++b)
                for (long cc = -bound; cc <= bound; ++cc)
                    compare({a, b, cc}, ginzburg_cocharacter(a, b, cc),
                            [&](const Valuation& v) { return ginzburg_matrix_oracle(a, b, cc, v); });
        return rep;
    }

    GarrettExponents e{};
    const long side = 2 * bound + 1;
    long total = 1;
    for (int i = 0; i < 6; ++i) total *= side;
    for (long idx = 0; idx < total; ++idx) {
        long rest = idx;
        for (auto& x : e) {
            x = rest % side - bound;
            rest /= side;
        }
        if (!garrett_exponents_admissible(e)) continue;
        compare(std::vector<long>(e.begin(), e.end()), garrett_cocharacter(e),
                [&](const Valuation& v) { return garrett_tensor_oracle(e, v); });
    }
    return rep;
}

}  // namespace weakdual
