#pragma once

#include "weakdual/root_data.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weakdual {

struct RelevantWeightSet {
    std::string case_name;
    long max_degree = 0;
    std::map<long, std::vector<WeightVector>> by_degree;
};

struct AutomorphicWeightSet {
    std::string case_name;
    long max_degree = 0;
    std::map<long, std::vector<CoweightVector>> by_degree;
};

// Degree of λ for the grading cocharacter; requires a graded case.
Rational grading_degree(const CaseData& c, const WeightVector& lambda);

bool is_relevant(const CaseData& c, const WeightVector& lambda);
// ϖ_α − n_α̌θ for each simple α, then ρ − (a−1)θ.
std::vector<WeightVector> extremal_generators(const CaseData& c);
// Coefficients on extremal_generators, or nullopt when some coefficient is negative.
std::optional<QVector> decompose_on_extremals(const CaseData& c, const WeightVector& lambda);
RelevantWeightSet enumerate_relevant(const CaseData& c, long max_degree);

bool satisfies_automorphic_bounds(const CaseData& c, const CoweightVector& chi);
AutomorphicWeightSet enumerate_automorphic(const CaseData& c, long max_degree);

// True iff every n_α̌⁻¹ϖ_α is a convex combination of the (ρ−β)/(a−1).
bool hull_redundancy(const CaseData& c);

// χ ↦ −w₀(image of χ in the dual weight space).
WeightVector automorphic_to_spectral(const CaseData& c, const CaseData& dual, const CoweightVector& chi);

struct WeightSetComparison {
    bool equal = true;
    std::optional<long> first_mismatch;
    std::map<long, std::pair<std::size_t, std::size_t>> counts;  // degree -> (automorphic, relevant)
};

WeightSetComparison compare_weight_sets(const CaseData& c, const CaseData& dual, const AutomorphicWeightSet& aut,
                                        const RelevantWeightSet& rel);

}  // namespace weakdual
