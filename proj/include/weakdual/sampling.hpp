#pragma once

#include "weakdual/classical.hpp"
#include "weakdual/rep_theory.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace weakdual {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

// WEAKDUAL_SEED if set and parseable, otherwise kDefaultSeed.
std::uint64_t default_seed();

// Rationals p/q with p ∈ [−10, 10] \ {0} and q ∈ [1, 10], reduced.
// Integer draws use rejection on the raw engine output, so sequences do not
// depend on the standard library's distribution implementation.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

    long uniform(long lo, long hi);
    Rational nonzero_rational();
    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

// Identity first, then a point with all coordinates equal, then one with a
// repeated leading pair, then uniform draws; `count` points in total.
std::vector<SatakePoint> sample_satake_points(const CaseData& c, std::size_t count, std::uint64_t seed);

std::vector<GL2Satake> sample_gl2(std::size_t count, std::uint64_t seed, bool unimodular = false);
std::vector<Rational> sample_rationals(std::size_t count, std::uint64_t seed, bool exclude_one = false);

}  // namespace weakdual
