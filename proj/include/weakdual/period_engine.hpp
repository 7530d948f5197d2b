#pragma once

#include "weakdual/cones.hpp"
#include "weakdual/lfactors.hpp"
#include "weakdual/rep_theory.hpp"
#include "weakdual/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weakdual {

// Automorphic group and the dual group carrying the spectral space.
struct CasePair {
    std::string name;
    const CaseData* automorphic = nullptr;
    const CaseData* spectral = nullptr;
};

// "ginzburg", "garrett", or any case name with a catalog dual.
CasePair case_pair(const std::string& name);
std::vector<std::string> pair_names();

// Σ_χ u^{−⟨χ,θ⟩} s_χ(s); s is a Satake point of the dual case.
HalfPowerSeries automorphic_local_factor(const CaseData& c, const SatakePoint& s, long trunc);
HalfPowerSeries automorphic_local_factor(const CaseData& c, const AutomorphicWeightSet& weights, const SatakePoint& s,
                                         long trunc);
HalfPowerSeries spectral_local_factor(const CaseData& spectral, const SatakePoint& s, long trunc);

// Local sum before the χ ↦ χ + 2mρ̌ + (2+γ)mθ̌ reindexing; m is the order of the half different.
HalfPowerSeries automorphic_local_factor_unreindexed(const CaseData& c, const SatakePoint& s, long m, long trunc);
// Checks unreindexed(m) = u^{−2mℷ} θ̌-central factor · reindexed, coefficientwise up to trunc.
bool verify_reindexing(const CaseData& c, const SatakePoint& s, long m, long trunc);

struct DualityReport {
    bool equal = false;
    std::optional<long> first_divergent_degree;
    HalfPowerSeries automorphic;
    HalfPowerSeries spectral;
};

DualityReport verify_local_duality(const CasePair& p, const SatakePoint& s, long trunc);
// Same comparison with an explicitly supplied automorphic weight set.
DualityReport verify_local_duality(const CasePair& p, const AutomorphicWeightSet& weights, const SatakePoint& s,
                                   long trunc);

struct LedgerEntry {
    std::string label;
    bool automorphic = true;  // false: spectral normalization moved across
    Rational exponent;        // power of q^{g−1}
};

struct ExponentLedger {
    std::string case_name;
    long genus = 0;
    std::vector<LedgerEntry> entries;

    Rational total() const;
    Rational side_total(bool automorphic) const;
    Rational q_power() const { return total() * (genus - 1); }
    // Total expressed as a power of Δ^{1/4} = q^{(g−1)/2}.
    Rational quarter_delta_units() const { return 2 * total(); }
};

ExponentLedger global_exponent_ledger(const CaseData& c, long genus);

bool verify_prefactor_identities(const Rational& a);

struct Place {
    long q = 2;
    SatakePoint satake;
};

struct PlaceResult {
    long q = 2;
    std::string label;
    DualityReport report;
};

struct GlobalReport {
    std::string pair;
    long genus = 0;
    long trunc = 0;
    std::vector<PlaceResult> places;
    ExponentLedger ledger;
    std::string central_character_token;
    bool all_places_match = true;
    bool discrepancy_matches = false;
    bool ok() const { return all_places_match && discrepancy_matches; }
};

bool is_prime_power(long q);
GlobalReport assemble_global(const CasePair& p, long genus, const std::vector<Place>& places, long trunc);

}  // namespace weakdual
