#include "weakdual/period_engine.hpp"

#include <map>
#include <mutex>

namespace weakdual {

namespace {

const CaseConstants& constants_of(const CaseData& c)
{
    if (!c.constants || !c.theta || !c.theta_check) throw DomainError("case '" + c.name + "' has no period data");
    return *c.constants;
}

std::vector<std::vector<Component>> dual_components(const CaseData& c, const AutomorphicWeightSet& weights, long trunc)
{
    std::vector<std::vector<Component>> by_degree(static_cast<std::size_t>(trunc + 1));
    for (const auto& [d, chis] : weights.by_degree) {
        if (d < 0 || d > trunc) continue;
        for (const auto& chi : chis) by_degree[d].push_back({duality_image(c, chi), 1});
    }
    return by_degree;
}

const CaseData& dual_of(const CaseData& c)
{
    if (c.dual_case.empty() || !c.duality_map) throw DomainError("case '" + c.name + "' has no dual");
    return load_case(c.dual_case);
}

std::shared_ptr<const GradedCharacter> automorphic_character(const CaseData& c, long trunc)
{
    static std::mutex mutex;
    static std::map<std::pair<std::string, long>, std::shared_ptr<const GradedCharacter>> memo;
    const auto key = std::make_pair(c.name, trunc);
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    const CaseData& dual = dual_of(c);
    auto gc = std::make_shared<const GradedCharacter>(dual, dual_components(c, enumerate_automorphic(c, trunc), trunc));
    std::lock_guard lock(mutex);
    return memo.emplace(key, std::move(gc)).first->second;
}

template <class F>
void for_each_box(const std::vector<long>& lo, const std::vector<long>& hi, F&& f)
{
    std::vector<long> cur = lo;
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) return;
    while (true) {
        f(cur);
        std::size_t i = 0;
        for (; i < cur.size(); ++i) {
            if (cur[i] < hi[i]) {
                ++cur[i];
                break;
            }
            cur[i] = lo[i];
        }
        if (i == cur.size()) return;
    }
}

SatakePoint checked_point(const CaseData& c, const SatakePoint& s)
{
    try {
        satake_values(c, s);
    } catch (const DimensionError& e) {
        throw DomainError(std::string("Satake point incompatible with ") + c.name + ": " + e.what());
    }
    return s;
}

}  // namespace

CasePair case_pair(const std::string& name)
{
    if (name == "ginzburg" || name == "garrett") return case_pair(name + "_auto");
    const CaseData& c = load_case(name);
    return {name, &c, &dual_of(c)};
}

std::vector<std::string> pair_names() { return {"ginzburg", "garrett"}; }

HalfPowerSeries automorphic_local_factor(const CaseData& c, const SatakePoint& s, long trunc)
{
    if (trunc < 0) throw DomainError("truncation order must be nonnegative");
    return HalfPowerSeries::from_graded(automorphic_character(c, trunc)->evaluate(s));
}

HalfPowerSeries automorphic_local_factor(const CaseData& c, const AutomorphicWeightSet& weights, const SatakePoint& s,
                                         long trunc)
{
    if (trunc < 0) throw DomainError("truncation order must be nonnegative");
    const CaseData& dual = dual_of(c);
    return HalfPowerSeries::from_graded(GradedCharacter(dual, dual_components(c, weights, trunc)).evaluate(s));
}

HalfPowerSeries spectral_local_factor(const CaseData& spectral, const SatakePoint& s, long trunc)
{
    if (trunc < 0) throw DomainError("truncation order must be nonnegative");
    return HalfPowerSeries::from_graded(nonlinear_local_factor(spectral, s, trunc));
}

HalfPowerSeries automorphic_local_factor_unreindexed(const CaseData& c, const SatakePoint& s, long m, long trunc)
{
    const auto& k = constants_of(c);
    if (trunc < 0) throw DomainError("truncation order must be nonnegative");
    if (m < 0) throw DomainError("m must be nonnegative");
    if (!is_lattice(c, *c.theta)) throw DomainError("theta is not a lattice weight of " + c.name);
    const CaseData& dual = dual_of(c);
    const Rational am1 = k.a - 1;
    const Rational offset_q = 4 * m * k.a - 2 * m;  // u-exponent of the constant in front of each summand
    const Rational shift_q = (2 + k.gamma) * m;     // total central shift of χ
    const Rational two_gimel_m = 2 * m * k.gimel;
    if (!is_integer(offset_q) || !is_integer(shift_q) || !is_integer(two_gimel_m))
        throw DomainError("non-integral exponents for m = " + std::to_string(m));
    const long offset = to_long_exact(offset_q);
    const long shift = to_long_exact(shift_q);
    const long pre_trunc = trunc + to_long_exact(two_gimel_m);

    const CoweightVector two_m_rho = Rational(2 * m) * c.rho_check;
    const std::size_t n = c.semisimple_rank();
    satake_values(dual, s);
    HalfPowerSeries out(pre_trunc);
    for (long d = -shift; d + offset <= pre_trunc; ++d) {
        std::vector<long> lo(n, 0), hi(n);
        for (std::size_t j = 0; j < n; ++j) {
            const auto& w = c.fundamental_weights[j];
            const Rational cap =
                (c.n_alpha_check[j] * (d + k.gamma * m) + pair(c, w, two_m_rho)) / pair(c, w, c.fundamental_coweights[j]);
            hi[j] = to_long(floor_of(cap));
        }
        for_each_box(lo, hi, [&](const std::vector<long>& ap) {
            // χ_old + 2mρ̌ has simple coordinates ap.
            CoweightVector chi = Rational(d) * *c.theta_check;
            for (std::size_t j = 0; j < n; ++j)
                chi = chi + Rational(ap[j] - 2 * m) * c.fundamental_coweights[j];
            if (!is_lattice(c, chi)) return;
            if ((pair(c, c.rho, chi) + m) / am1 < d) return;
            for (const auto& al : c.simple_roots)
                if (d < pair(c, c.rho - al, chi) / am1 - k.gamma * m) return;
            for (std::size_t j = 0; j < n; ++j)
                if (d < pair(c, c.fundamental_weights[j], chi) / c.n_alpha_check[j] - k.gamma * m) return;
            const Rational v = character_value(dual, duality_image(c, chi + two_m_rho), s);
            if (v != 0) out.add(offset + d, v);
        });
    }
    return out;
}

bool verify_reindexing(const CaseData& c, const SatakePoint& s, long m, long trunc)
{
    const auto& k = constants_of(c);
    const HalfPowerSeries pre = automorphic_local_factor_unreindexed(c, s, m, trunc);
    const HalfPowerSeries post = automorphic_local_factor(c, s, trunc);
    const CaseData& dual = dual_of(c);
    const CoweightVector central = Rational(-(2 + k.gamma) * m) * *c.theta_check;
    const Rational factor = evaluate_weight(dual, duality_image(c, central), s);
    return pre == post.scaled(factor, to_long_exact(2 * m * k.gimel));
}

DualityReport verify_local_duality(const CasePair& p, const SatakePoint& s, long trunc)
{
    checked_point(*p.spectral, s);
    DualityReport r;
    r.automorphic = automorphic_local_factor(*p.automorphic, s, trunc);
    r.spectral = spectral_local_factor(*p.spectral, s, trunc);
    r.first_divergent_degree = r.automorphic.first_difference(r.spectral);
    r.equal = !r.first_divergent_degree;
    return r;
}

DualityReport verify_local_duality(const CasePair& p, const AutomorphicWeightSet& weights, const SatakePoint& s,
                                   long trunc)
{
    checked_point(*p.spectral, s);
    DualityReport r;
    r.automorphic = automorphic_local_factor(*p.automorphic, weights, s, trunc);
    r.spectral = spectral_local_factor(*p.spectral, s, trunc);
    r.first_divergent_degree = r.automorphic.first_difference(r.spectral);
    r.equal = !r.first_divergent_degree;
    return r;
}

Rational ExponentLedger::total() const
{
    Rational t = 0;
    for (const auto& e : entries) t += e.exponent;
    return t;
}

Rational ExponentLedger::side_total(bool automorphic) const
{
    Rational t = 0;
    for (const auto& e : entries)
        if (e.automorphic == automorphic) t += e.exponent;
    return t;
}

ExponentLedger global_exponent_ledger(const CaseData& c, long genus)
{
    if (genus < 0) throw DomainError("genus must be nonnegative");
    const auto& k = constants_of(c);
    const Rational u = k.dim_U;
    const Rational eta_gamma = k.eigenform_power * k.gamma;  // ⟨η, γθ̌⟩
    ExponentLedger l{c.name, genus, {}};
    // Powers of Δ = q^{2g−2} are doubled to express them in q^{g−1}.
    l.entries.push_back({"self-dual measure on U: Delta^{(dim U - 1)/2}", true, u - 1});
    l.entries.push_back({"theta series normalization: Delta^{-dim S/4}", true, -u / 2});
    l.entries.push_back({"|partial^{1/2}|^{1/2} on eta", true, -eta_gamma / 2});
    l.entries.push_back({"Whittaker normalization W_f^0: Delta^{a - dim U/4}", true, 2 * k.a - u / 2});
    l.entries.push_back({"local constants prod_v q^{-m_v gimel}", true, -k.gimel});
    // The spectral side carries Δ^{(ε − dim X̌)/4}; moving it across flips the sign.
    l.entries.push_back({"spectral normalization Delta^{(epsilon - dim Xcheck)/4}, inverted", false,
                         (Rational(k.dim_G_mod_U) - k.epsilon) / 2});
    return l;
}

bool verify_prefactor_identities(const Rational& a)
{
    if (a == 1) throw DomainError("a = 1 has no gamma");
    const Rational gamma = 1 / (a - 1);
    const Rational gimel = (2 * a - 1) * (2 * a - 3) / (2 * a - 2);
    // Linear in m with zero constant term: compare the m-coefficients.
    const Rational lhs_m = -2 * a - 2 * (a - 1) + (2 + gamma) * (2 * a - 1) / 2;
    const bool reindex = lhs_m == -gimel && (2 * a - 1) * (-1 + gamma / 2) == -gimel;
    // Q as a polynomial in u = dim U: the u-coefficient must vanish.
    const Rational q_u = Rational(1, 2) - Rational(1, 4) - Rational(1, 4);
    const Rational q_0 = Rational(-1, 2) - (2 * a - 1) * gamma / 4 + a;
    const bool snt = q_u == 0 && q_0 == gimel / 2 && q_0 == (a - Rational(1, 2)) * (1 - gamma / 2);
    // Shifting χ by 2mρ̌ + (2+γ)mθ̌ moves u^{−(4a−2)m} to u^{−2mℷ}.
    const bool shift = (4 * a - 2) - (2 + gamma) == 2 * gimel;
    return reindex && snt && shift;
}

bool is_prime_power(long q)
{
    if (q < 2) return false;
    for (long p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        while (q % p == 0) q /= p;
        return q == 1;
    }
    return true;
}

GlobalReport assemble_global(const CasePair& p, long genus, const std::vector<Place>& places, long trunc)
{
    for (const auto& pl : places)
        if (!is_prime_power(pl.q)) throw DomainError("q = " + std::to_string(pl.q) + " is not a prime power");
    const auto& k = constants_of(*p.automorphic);
    GlobalReport g;
    g.pair = p.name;
    g.genus = genus;
    g.trunc = trunc;
    g.ledger = global_exponent_ledger(*p.automorphic, genus);
    g.central_character_token = "(chi_f o theta_check)(partial^{-1-gamma/2}), gamma = " + to_string(k.gamma);
    for (const auto& pl : places) {
        PlaceResult r{pl.q, pl.satake.label, verify_local_duality(p, pl.satake, trunc)};
        g.all_places_match = g.all_places_match && r.report.equal;
        g.places.push_back(std::move(r));
    }
    const Rational aut = g.ledger.side_total(true);
    const Rational spectral = -g.ledger.side_total(false);
    // Both sides in Δ^{1/4} units against dim(G/U) − ε from the root data.
    g.discrepancy_matches =
        2 * (aut - spectral) == k.discrepancy_exponent && g.ledger.quarter_delta_units() == k.discrepancy_exponent;
    return g;
}

}  // namespace weakdual
