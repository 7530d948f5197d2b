#include "weakdual/lfactors.hpp"

#include "weakdual/cones.hpp"

#include <map>
#include <mutex>

namespace weakdual {

namespace {

struct LinearSpaceEntry {
    const char* name;
    SpaceKind kind;
    const char* group;
};

constexpr LinearSpaceEntry kLinearSpaces[] = {
    {"A1", SpaceKind::scaling_line, "gl1"},
    {"A2", SpaceKind::standard, "gl2"},
    {"A3", SpaceKind::standard, "gl3"},
    {"A2xA2", SpaceKind::tensor_square, "gl2xgl2"},
    {"rank_one_2x2", SpaceKind::rank_one_tensor, "gl2xgl2"},
};

WeightVector weight_of(std::initializer_list<long> xs)
{
    QVector v;
    for (long x : xs) v.emplace_back(x);
    return WeightVector(v);
}

}  // namespace

SpectralSpace spectral_space(const std::string& name)
{
    for (const auto& e : kLinearSpaces)
        if (name == e.name) return {name, e.kind, &load_case(e.group)};
    const CaseData& c = load_case(name);
    if (!c.grading_cochar || !c.rho_check_prime) throw CatalogError("case '" + name + "' has no graded cone");
    return {name, SpaceKind::relevant_cone, &c};
}

std::vector<std::string> spectral_space_names()
{
    std::vector<std::string> names;
    for (const auto& n : catalog_names())
        if (load_case(n).grading_cochar) names.push_back(n);
    for (const auto& e : kLinearSpaces) names.emplace_back(e.name);
    return names;
}

std::vector<Component> graded_components(const SpectralSpace& space, long degree)
{
    if (degree < 0) return {};
    const CaseData& g = *space.group;
    std::vector<Component> out;
    switch (space.kind) {
    case SpaceKind::relevant_cone: {
        auto rel = enumerate_relevant(g, degree);
        for (const auto& w : rel.by_degree[degree]) out.push_back({apply_minus_w0(g, w), 1});
        break;
    }
    case SpaceKind::scaling_line:
        out.push_back({weight_of({degree}), 1});
        break;
    case SpaceKind::standard: {
        QVector v(g.rank);
        v[0] = degree;
        out.push_back({WeightVector(v), 1});
        break;
    }
    case SpaceKind::tensor_square:
        // Cauchy: Sym^k(V ⊗ W) = ⊕_{μ ⊢ k, ≤ 2 rows} S_μ V ⊗ S_μ W.
        for (long m2 = 0; 2 * m2 <= degree; ++m2) out.push_back({weight_of({degree - m2, m2, degree - m2, m2}), 1});
        break;
    case SpaceKind::rank_one_tensor:
        out.push_back({weight_of({degree, 0, degree, 0}), 1});
        break;
    }
    return out;
}

GradedCharacter::GradedCharacter(const CaseData& group, std::vector<std::vector<Component>> by_degree)
    : group_(&group)
{
    for (const auto& comps : by_degree) {
        LaurentPolynomial p;
        for (const auto& comp : comps) p.add_character(group, comp.highest_weight, comp.multiplicity);
        pieces_.push_back(std::move(p));
    }
}

namespace {

std::vector<std::vector<Component>> all_components(const SpectralSpace& space, long trunc)
{
    if (trunc < 0) throw DomainError("truncation order must be nonnegative");
    std::vector<std::vector<Component>> by_degree(static_cast<std::size_t>(trunc + 1));
    if (space.kind == SpaceKind::relevant_cone) {
        auto rel = enumerate_relevant(*space.group, trunc);
        for (long d = 0; d <= trunc; ++d)
            for (const auto& w : rel.by_degree[d]) by_degree[d].push_back({apply_minus_w0(*space.group, w), 1});
    } else {
        for (long d = 0; d <= trunc; ++d) by_degree[d] = graded_components(space, d);
    }
    return by_degree;
}

}  // namespace

GradedCharacter::GradedCharacter(const SpectralSpace& space, long trunc)
    : GradedCharacter(*space.group, all_components(space, trunc))
{
}

GradedSeries GradedCharacter::evaluate(const SatakePoint& s) const
{
    const QVector vals = satake_values(*group_, s);
    GradedSeries out(trunc());
    for (long d = 0; d <= trunc(); ++d) out[d] = piece(d).evaluate(vals);
    return out;
}

GradedSeries GradedCharacter::dimensions() const
{
    GradedSeries out(trunc());
    for (long d = 0; d <= trunc(); ++d) out[d] = Rational(piece(d).value_at_one());
    return out;
}

std::shared_ptr<const GradedCharacter> graded_character(const SpectralSpace& space, long trunc)
{
    static std::mutex mutex;
    static std::map<std::pair<std::string, long>, std::shared_ptr<const GradedCharacter>> memo;
    const auto key = std::make_pair(space.name, trunc);
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    auto gc = std::make_shared<const GradedCharacter>(space, trunc);
    std::lock_guard lock(mutex);
    return memo.emplace(key, std::move(gc)).first->second;
}

GradedSeries nonlinear_local_factor(const SpectralSpace& space, const SatakePoint& s, long trunc)
{
    return graded_character(space, trunc)->evaluate(s);
}

GradedSeries nonlinear_local_factor(const CaseData& c, const SatakePoint& s, long trunc)
{
    return nonlinear_local_factor(spectral_space(c.name), s, trunc);
}

GradedSeries linear_local_factor(const QVector& eigenvalues, long trunc)
{
    GradedSeries out = GradedSeries::one(trunc);
    for (const auto& e : eigenvalues) {
        if (e == 0) throw DomainError("eigenvalues must be nonzero");
        out = out * GradedSeries::geometric(trunc, e);
    }
    return out;
}

std::vector<EvaluatedInvariant> evaluate_invariants(const CaseData& c, const std::vector<InvariantSpec>& specs,
                                                    const SatakePoint& s)
{
    std::vector<EvaluatedInvariant> out;
    for (const auto& p : specs) {
        if (p.degree < 2) throw DomainError("semi-invariant degrees must exceed 1");
        out.push_back({p.degree, evaluate_weight(c, p.weight, s)});
    }
    return out;
}

GradedSeries lci_local_factor(const QVector& ambient, const std::vector<EvaluatedInvariant>& invariants, long trunc)
{
    GradedSeries out = linear_local_factor(ambient, trunc);
    for (const auto& p : invariants) {
        if (p.degree < 2) throw DomainError("semi-invariant degrees must exceed 1");
        GradedSeries f = GradedSeries::one(trunc);
        if (p.degree <= trunc) f[p.degree] = -p.value;
        out = out * f;
    }
    return out;
}

LciPresentation lci_presentation(const CaseData& c)
{
    // Ambient: the degree-one piece. Semi-invariants: tr X² and det X on the
    // nilcone side, Cayley's hyperdeterminant on the tensor side; their torus
    // characters are pure central twists of the degree.
    if (c.name == "ginzburg_auto")
        return {weight_of({1, 1, 1}), {{2, weight_of({0, 0, 2})}, {3, weight_of({0, 0, 3})}}};
    if (c.name == "garrett_auto") {
        QVector amb{1, 1, 1, Rational(1, 2)};
        return {WeightVector(amb), {{4, weight_of({0, 0, 0, 2})}}};
    }
    throw DomainError("no complete-intersection presentation for case " + c.name);
}

QVector ambient_eigenvalues(const CaseData& c, const LciPresentation& p, const SatakePoint& s)
{
    QVector out;
    for (const auto& [mu, m] : weight_multiplicities(c, p.ambient_highest_weight)->entries) {
        const Rational v = evaluate_weight(c, mu, s);
        for (long k = 0; k < m; ++k) out.push_back(v);
    }
    return out;
}

QVector standard_eigenvalues(const SpectralSpace& space, const SatakePoint& s)
{
    const QVector vals = satake_values(*space.group, s);
    switch (space.kind) {
    case SpaceKind::scaling_line:
    case SpaceKind::standard:
        return vals;
    case SpaceKind::tensor_square:
        return {vals[0] * vals[2], vals[0] * vals[3], vals[1] * vals[2], vals[1] * vals[3]};
    default:
        throw DomainError("space '" + space.name + "' is not a linear representation");
    }
}

GradedSeries hilbert_series(const SpectralSpace& space, long trunc)
{
    const auto comps = all_components(space, trunc);
    GradedSeries out(trunc);
    for (long d = 0; d <= trunc; ++d)
        for (const auto& comp : comps[d])
            out[d] += Rational(weyl_dimension(*space.group, comp.highest_weight)) * comp.multiplicity;
    return out;
}

GradedSeries hilbert_series(const CaseData& c, long trunc) { return hilbert_series(spectral_space(c.name), trunc); }

}  // namespace weakdual
