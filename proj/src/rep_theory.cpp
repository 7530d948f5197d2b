#include "weakdual/rep_theory.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>

namespace weakdual {

SatakePoint identity_point(const CaseData& c)
{
    SatakePoint s;
    const std::size_t ss = c.rank - (c.spec.satake_has_gm ? 1 : 0);
    s.semisimple.assign(ss, Rational(1));
    if (c.spec.satake_has_gm) s.gm = Rational(1);
    s.label = "identity";
    return s;
}

QVector satake_values(const CaseData& c, const SatakePoint& s)
{
    const std::size_t ss = c.rank - (c.spec.satake_has_gm ? 1 : 0);
    if (s.semisimple.size() != ss || s.gm.has_value() != c.spec.satake_has_gm)
        throw DimensionError("Satake point does not match the coordinates of case " + c.name);
    QVector vals = s.semisimple;
    if (s.gm) vals.push_back(*s.gm);
    for (const auto& x : vals)
        if (x == 0) throw DomainError("Satake point has a zero coordinate");
    return vals;
}

namespace {

Rational monomial_value(const QVector& vals, const std::vector<long>& e)
{
    Rational r = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) r *= power(vals[i], e[i]);
    return r;
}

using XVec = std::vector<long>;

struct Engine {
    const CaseData& c;
    std::size_t n;
    std::vector<XVec> root_x;  // positive roots in fundamental-weight coordinates

    explicit Engine(const CaseData& cd) : c(cd), n(cd.semisimple_rank())
    {
        for (const auto& beta : c.positive_roots) {
            XVec x(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) x[j] += beta[i] * c.cartan[i][j];
            root_x.push_back(x);
        }
    }

    Rational form(const XVec& a, const XVec& b) const
    {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a[i] && b[j]) s += c.form(i, j) * (a[i] * b[j]);
        return s;
    }

    XVec reflect_x(const XVec& x, std::size_t i) const
    {
        XVec y = x;
        for (std::size_t j = 0; j < n; ++j) y[j] -= x[i] * c.cartan[i][j];
        return y;
    }

    XVec dominant(XVec x) const
    {
        for (;;) {
            std::size_t i = 0;
            while (i < n && x[i] >= 0) ++i;
            if (i == n) return x;
            x = reflect_x(x, i);
        }
    }

    WeightVector full(const WeightVector& lambda, const XVec& x0, const XVec& x) const
    {
        WeightVector w = lambda;
        for (std::size_t j = 0; j < n; ++j)
            if (x[j] != x0[j]) w = w + Rational(x[j] - x0[j]) * c.fundamental_weights[j];
        return w;
    }
};

std::vector<long> integer_coords(const QVector& v)
{
    std::vector<long> out;
    for (const auto& q : v) out.push_back(to_long_exact(q));
    return out;
}

MultiplicityTable compute_table(const CaseData& c, const WeightVector& lambda)
{
    Engine eng(c);
    const std::size_t n = eng.n;
    const XVec X = integer_coords(simple_coordinates(c, lambda));
    const XVec Y = integer_coords(simple_coordinates(c, apply_minus_w0(c, lambda)));

    // Root-coordinate box from λ − w0λ = Σ K_i α_i.
    QMatrix Ct(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) Ct(j, i) = c.cartan[i][j];
    std::vector<long> K(n, 0);
    if (n) {
        QVector sum(n);
        for (std::size_t j = 0; j < n; ++j) sum[j] = X[j] + Y[j];
        K = integer_coords(*solve(Ct, sum));
    }

    std::vector<std::pair<long, XVec>> dominants;  // (height, x)
    std::vector<long> k(n, 0);
    for (;;) {
        XVec x = X;
        long height = 0;
        for (std::size_t i = 0; i < n; ++i) {
            height += k[i];
            for (std::size_t j = 0; j < n; ++j) x[j] -= k[i] * c.cartan[i][j];
        }
        if (std::all_of(x.begin(), x.end(), [](long v) { return v >= 0; })) dominants.emplace_back(height, x);
        std::size_t i = 0;
        while (i < n && k[i] == K[i]) k[i++] = 0;
        if (i == n) break;
        ++k[i];
    }
    std::sort(dominants.begin(), dominants.end());

    XVec rho(n, 1);
    auto shifted = [&](const XVec& x) {
        XVec y = x;
        for (std::size_t j = 0; j < n; ++j) y[j] += rho[j];
        return y;
    };
    const Rational top = eng.form(shifted(X), shifted(X));

    std::map<XVec, long> mult;
    for (const auto& [height, mu] : dominants) {
        if (height == 0) {
            mult[mu] = 1;
            continue;
        }
        Rational acc = 0;
        for (const auto& bx : eng.root_x) {
            XVec nu = mu;
            for (;;) {
                for (std::size_t j = 0; j < n; ++j) nu[j] += bx[j];
                auto it = mult.find(eng.dominant(nu));
                if (it == mult.end()) break;
                acc += it->second * eng.form(nu, bx);
            }
        }
        const Rational denom = top - eng.form(shifted(mu), shifted(mu));
        const Rational m = 2 * acc / denom;
        if (!is_integer(m) || m <= 0) throw DomainError("Freudenthal recursion produced a non-integral multiplicity");
        mult[mu] = to_long(m.get_num());
    }

    MultiplicityTable t;
    t.highest_weight = lambda;
    for (const auto& [mu, m] : mult) {
        std::set<XVec> orbit{mu};
        std::vector<XVec> stack{mu};
        while (!stack.empty()) {
            XVec x = stack.back();
            stack.pop_back();
            for (std::size_t i = 0; i < n; ++i) {
                XVec y = eng.reflect_x(x, i);
                if (orbit.insert(y).second) stack.push_back(y);
            }
        }
        for (const auto& x : orbit) t.entries.emplace(eng.full(lambda, X, x), m);
    }
    return t;
}

struct TableCache {
    std::shared_mutex mutex;
    std::map<std::pair<std::string, WeightVector>, std::shared_ptr<const MultiplicityTable>> tables;
};

TableCache& cache()
{
    static TableCache c;
    return c;
}

}  // namespace

Rational evaluate_weight(const CaseData& c, const WeightVector& w, const SatakePoint& s)
{
    return monomial_value(satake_values(c, s), lattice_exponents(c, w));
}

long MultiplicityTable::dimension() const
{
    long d = 0;
    for (const auto& [_, m] : entries) d += m;
    return d;
}

std::shared_ptr<const MultiplicityTable> weight_multiplicities(const CaseData& c, const WeightVector& lambda)
{
    if (lambda.size() != c.rank) throw DimensionError("weight of wrong rank for case " + c.name);
    if (!is_lattice(c, lambda)) throw DomainError("weight " + to_string(lambda) + " is not in the lattice");
    if (!is_dominant(c, lambda)) throw DomainError("weight " + to_string(lambda) + " is not dominant");
    auto key = std::make_pair(c.name, lambda);
    auto& ch = cache();
    {
        std::shared_lock lock(ch.mutex);
        auto it = ch.tables.find(key);
        if (it != ch.tables.end()) return it->second;
    }
    auto table = std::make_shared<const MultiplicityTable>(compute_table(c, lambda));
    std::unique_lock lock(ch.mutex);
    return ch.tables.emplace(std::move(key), std::move(table)).first->second;
}

Rational character_value(const CaseData& c, const WeightVector& lambda, const SatakePoint& s)
{
    const QVector vals = satake_values(c, s);
    if (!is_lattice(c, lambda)) throw DomainError("weight " + to_string(lambda) + " is not in the lattice");
    if (!is_dominant(c, lambda)) return 0;
    Rational sum = 0;
    for (const auto& [mu, m] : weight_multiplicities(c, lambda)->entries)
        sum += m * monomial_value(vals, lattice_exponents(c, mu));
    return sum;
}

Integer weyl_dimension(const CaseData& c, const WeightVector& lambda)
{
    if (!is_dominant(c, lambda)) throw DomainError("weyl_dimension needs a dominant weight");
    const WeightVector shifted = lambda + c.rho;
    Rational d = 1;
    for (const auto& co : c.positive_coroots) d *= pair(c, shifted, co) / pair(c, c.rho, co);
    if (!is_integer(d)) throw DomainError("Weyl dimension is not an integer; weight outside the lattice?");
    return d.get_num();
}

void LaurentPolynomial::add_term(const Monomial& m, const Integer& coeff)
{
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPolynomial::add_character(const CaseData& c, const WeightVector& lambda, const Integer& mult)
{
    for (const auto& [mu, m] : weight_multiplicities(c, lambda)->entries) add_term(lattice_exponents(c, mu), mult * m);
}

Rational LaurentPolynomial::evaluate(const QVector& values) const
{
    // Per-coordinate power tables keep repeated exponents cheap.
    std::vector<std::map<long, Rational>> powers(values.size());
    Rational sum = 0;
    for (const auto& [mono, coeff] : terms_) {
        if (mono.size() != values.size()) throw DimensionError("monomial/point size mismatch");
        Rational term = coeff;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (!mono[i]) continue;
            auto it = powers[i].find(mono[i]);
            if (it == powers[i].end()) it = powers[i].emplace(mono[i], power(values[i], mono[i])).first;
            term *= it->second;
        }
        sum += term;
    }
    return sum;
}

Integer LaurentPolynomial::value_at_one() const
{
    Integer s = 0;
    for (const auto& [_, c] : terms_) s += c;
    return s;
}

}  // namespace weakdual
