#include "weakdual/cones.hpp"

#include <algorithm>

namespace weakdual {

namespace {

const CaseConstants& constants_of(const CaseData& c)
{
    if (!c.constants || !c.theta) throw DomainError("case '" + c.name + "' has no cone structure");
    return *c.constants;
}

template <class F>
void for_each_box_point(const std::vector<long>& hi, F&& f)
{
    std::vector<long> k(hi.size(), 0);
    for (;;) {
        f(k);
        std::size_t i = 0;
        while (i < k.size() && k[i] == hi[i]) k[i++] = 0;
        if (i == k.size()) return;
        ++k[i];
    }
}

}  // namespace

Rational grading_degree(const CaseData& c, const WeightVector& lambda)
{
    if (!c.grading_cochar) throw DomainError("case '" + c.name + "' is not graded");
    return pair(c, lambda, *c.grading_cochar);
}

bool is_relevant(const CaseData& c, const WeightVector& lambda)
{
    if (!c.rho_check_prime) throw DomainError("case '" + c.name + "' has no rho_check_prime");
    const Rational p = pair(c, lambda, *c.rho_check_prime);
    if (p < 0) return false;
    for (const auto& co : c.simple_coroots)
        if (pair(c, lambda, co) < p) return false;
    return true;
}

std::vector<WeightVector> extremal_generators(const CaseData& c)
{
    const auto& k = constants_of(c);
    std::vector<WeightVector> gens;
    for (std::size_t i = 0; i < c.semisimple_rank(); ++i)
        gens.push_back(c.fundamental_weights[i] - c.n_alpha_check[i] * *c.theta);
    gens.push_back(c.rho - (k.a - 1) * *c.theta);
    return gens;
}

std::optional<QVector> decompose_on_extremals(const CaseData& c, const WeightVector& lambda)
{
    const auto gens = extremal_generators(c);
    if (gens.size() != c.rank) throw DomainError("extremal generators do not span for case " + c.name);
    std::vector<QVector> cols;
    for (const auto& g : gens) cols.push_back(g.coords());
    auto x = solve(QMatrix::from_columns(cols), lambda.coords());
    if (!x) throw DomainError("extremal generators are linearly dependent for case " + c.name);
    for (const auto& v : *x)
        if (v < 0) return std::nullopt;
    return x;
}

RelevantWeightSet enumerate_relevant(const CaseData& c, long max_degree)
{
    if (max_degree < 0) throw DomainError("max_degree must be nonnegative");
    const auto& k = constants_of(c);
    if (!c.grading_cochar) throw DomainError("case '" + c.name + "' is not graded");
    RelevantWeightSet out{c.name, max_degree, {}};
    const std::size_t n = c.semisimple_rank();
    for (long d = 0; d <= max_degree; ++d) {
        // λ = Σ x_α g_α + y g₀ with deg g_α = γ n_α̌ and deg g₀ = 1 bounds ⟨λ, α̌⟩ ≤ d/(γ n_α̌) + d.
        std::vector<long> hi(n);
        for (std::size_t i = 0; i < n; ++i)
            hi[i] = to_long(floor_of(Rational(d) / (k.gamma * c.n_alpha_check[i]) + d));
        const Rational central = Rational(-d) / k.gamma;  // ⟨λ, θ̌⟩
        auto& bucket = out.by_degree[d];
        for_each_box_point(hi, [&](const std::vector<long>& x) {
            WeightVector w = central * *c.theta;
            for (std::size_t i = 0; i < n; ++i)
                if (x[i]) w = w + Rational(x[i]) * c.fundamental_weights[i];
            if (!is_lattice(c, w) || !is_relevant(c, w)) return;
            if (!is_dominant(c, w)) throw DomainError("relevant weight " + to_string(w) + " is not dominant");
            if (grading_degree(c, w) != d) throw DomainError("grading degree bookkeeping failed");
            bucket.push_back(w);
        });
        std::sort(bucket.begin(), bucket.end());
    }
    return out;
}

bool hull_redundancy(const CaseData& c)
{
    const auto& k = constants_of(c);
    const std::size_t n = c.semisimple_rank();
    std::vector<QVector> cols;
    for (std::size_t j = 0; j < n; ++j)
        cols.push_back(scale(1 / (k.a - 1), simple_coordinates(c, c.rho - c.simple_roots[j])));
    const QMatrix A = QMatrix::from_columns(cols);
    for (std::size_t i = 0; i < n; ++i) {
        auto coeffs = solve(A, scale(1 / c.n_alpha_check[i], simple_coordinates(c, c.fundamental_weights[i])));
        if (!coeffs) return false;
        Rational total = 0;
        for (const auto& x : *coeffs) {
            if (x < 0) return false;
            total += x;
        }
        if (total != 1) return false;
    }
    return true;
}

bool satisfies_automorphic_bounds(const CaseData& c, const CoweightVector& chi)
{
    const auto& k = constants_of(c);
    if (!is_dominant(c, chi)) return false;
    const Rational d = pair(c, *c.theta, chi);
    const Rational am1 = k.a - 1;
    bool ok = pair(c, c.rho, chi) / am1 >= d;
    bool rho_alpha = true;
    for (const auto& al : c.simple_roots)
        if (d < pair(c, c.rho - al, chi) / am1) rho_alpha = false;
    bool varpi = true;
    for (std::size_t i = 0; i < c.semisimple_rank(); ++i)
        if (d < pair(c, c.fundamental_weights[i], chi) / c.n_alpha_check[i]) varpi = false;
    if (c.spec.convex_hull_simplification && rho_alpha && !varpi)
        throw DomainError("fundamental-weight bound is not implied by the rho-alpha bounds for case " + c.name);
    return ok && rho_alpha && varpi;
}

AutomorphicWeightSet enumerate_automorphic(const CaseData& c, long max_degree)
{
    if (max_degree < 0) throw DomainError("max_degree must be nonnegative");
    constants_of(c);
    if (c.spec.convex_hull_simplification && !hull_redundancy(c))
        throw DomainError("convex-hull simplification fails for case " + c.name);
    AutomorphicWeightSet out{c.name, max_degree, {}};
    const std::size_t n = c.semisimple_rank();
    for (long d = 0; d <= max_degree; ++d) {
        // ⟨χ, ϖ_j⟩ ≥ a_j ⟨ϖ_j, ϖ̌_j⟩ for dominant χ, so the ϖ bound caps a_j.
        std::vector<long> hi(n);
        for (std::size_t j = 0; j < n; ++j)
            hi[j] = to_long(floor_of(c.n_alpha_check[j] * d / pair(c, c.fundamental_weights[j], c.fundamental_coweights[j])));
        auto& bucket = out.by_degree[d];
        for_each_box_point(hi, [&](const std::vector<long>& a) {
            CoweightVector chi = Rational(d) * *c.theta_check;
            for (std::size_t j = 0; j < n; ++j)
                if (a[j]) chi = chi + Rational(a[j]) * c.fundamental_coweights[j];
            if (is_lattice(c, chi) && satisfies_automorphic_bounds(c, chi)) bucket.push_back(chi);
        });
        std::sort(bucket.begin(), bucket.end());
    }
    return out;
}

WeightVector automorphic_to_spectral(const CaseData& c, const CaseData& dual, const CoweightVector& chi)
{
    return apply_minus_w0(dual, duality_image(c, chi));
}

WeightSetComparison compare_weight_sets(const CaseData& c, const CaseData& dual, const AutomorphicWeightSet& aut,
                                        const RelevantWeightSet& rel)
{
    WeightSetComparison cmp;
    const long top = std::max(aut.max_degree, rel.max_degree);
    for (long d = 0; d <= top; ++d) {
        std::vector<WeightVector> mapped;
        if (auto it = aut.by_degree.find(d); it != aut.by_degree.end())
            for (const auto& chi : it->second) mapped.push_back(automorphic_to_spectral(c, dual, chi));
        std::sort(mapped.begin(), mapped.end());
        std::vector<WeightVector> target;
        if (auto it = rel.by_degree.find(d); it != rel.by_degree.end()) target = it->second;
        cmp.counts[d] = {mapped.size(), target.size()};
        if (mapped != target && cmp.equal) {
            cmp.equal = false;
            cmp.first_mismatch = d;
        }
    }
    return cmp;
}

}  // namespace weakdual
