#pragma once

#include "weakdual/rep_theory.hpp"
#include "weakdual/series.hpp"

#include <optional>

namespace weakdual {

// (1 − χ(ϖ) t)^{−1}
GradedSeries tate_local_factor(const Rational& chi_value, long trunc);

struct UPowerValue {
    Rational value;
    long u_exponent = 0;  // value · u^{u_exponent}
};

// q^{−⟨χ+2mρ̌, ρ⟩} s_{χ+2mρ̌}(s), with s a Satake point of the dual case.
UPowerValue casselman_shalika_value(const CaseData& c, const CoweightVector& chi, const SatakePoint& s, long m);

struct GL2Satake {
    Rational alpha, beta;
    GL2Satake(Rational a, Rational b);
    Rational det() const { return alpha * beta; }
    SatakePoint point() const;
};

struct HeckeVerdict {
    bool equal = false;
    std::optional<long> first_difference;
    HalfPowerSeries period_side;
    HalfPowerSeries l_function_side;
};

// Σ_α u^{−(α+2m)} s_{(α+m,−m)} against det^{−m}·det(1 − s u^{−1})^{−1}.
HeckeVerdict hecke_local_factor(const GL2Satake& s, long m, long trunc);

struct RankinSelbergVerdict {
    bool equal = false;
    std::optional<long> first_difference;
    GradedSeries lhs;  // (Σ_k s_k(A) s_k(B) t^k)·(1 − det(A)det(B) t²)^{−1}
    GradedSeries rhs;  // det(1 − (A⊗B) t)^{−1}
};

RankinSelbergVerdict rankin_selberg_check(const GL2Satake& A, const GL2Satake& B, long trunc);

// (g−1)(dim U − ⟨2ρ, 2ρ̌⟩)
Rational whittaker_beta(const CaseData& c, long genus);
// Exponent e with W_f^0 = Δ^e.
Rational whittaker_delta_exponent(const CaseData& c);

}  // namespace weakdual
