#pragma once

#include "weakdual/root_data.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace weakdual {

// Valuation of the unipotent coordinate t; nullopt stands for t = 0 (v = ∞).
using Valuation = std::optional<long>;

struct LocalPoint {
    CoweightVector chi;
    Valuation v_t;
};

bool is_integral(const CaseData& c, const LocalPoint& p);

// Torus part of the criterion and the least admissible v_t, independent of v_t.
struct TorusIntegrality {
    bool torus_ok = false;
    Rational min_v_t;
};
TorusIntegrality torus_integrality(const CaseData& c, const CoweightVector& chi);

// Cocharacter of diag(ϖ^a, ϖ^b, 1) × ϖ^c in the PGL3 × Gm coordinates.
CoweightVector ginzburg_cocharacter(long a, long b, long c);
bool ginzburg_matrix_oracle(long a, long b, long c, Valuation v_t);

// Exponents (a1, a2, a3, b1, b2, b3) of diag(ϖ^{a_i}, ϖ^{b_i}), with Gm exponent (Σa + Σb)/3.
using GarrettExponents = std::array<long, 6>;
bool garrett_exponents_admissible(const GarrettExponents& e);
CoweightVector garrett_cocharacter(const GarrettExponents& e);
bool garrett_tensor_oracle(const GarrettExponents& e, Valuation v_t);

struct Disagreement {
    std::vector<long> exponents;
    Valuation v_t;
    bool criterion = false;
    bool oracle = false;
};

struct AgreementReport {
    std::string case_name;
    long exponent_bound = 0;
    long v_t_lo = 0, v_t_hi = 0;
    long grid_size = 0;
    long integral_points = 0;
    std::vector<Disagreement> disagreements;
};

// Exhaustive comparison over exponents in [−bound, bound] and v_t ∈ [lo, hi] ∪ {∞}.
// For the Garrett case only exponent tuples with 3 | Σa + Σb are on the grid.
// A negative bound or lo > hi is an empty grid.
AgreementReport oracle_agreement_report(const std::string& case_name, long exponent_bound, long v_t_lo, long v_t_hi);

}  // namespace weakdual
