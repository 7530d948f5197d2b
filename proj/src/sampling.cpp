#include "weakdual/sampling.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace weakdual {

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("WEAKDUAL_SEED")) {
        try {
            std::size_t used = 0;
            const std::uint64_t v = std::stoull(env, &used);
            if (used == std::char_traits<char>::length(env)) return v;
        } catch (const std::exception&) {
        }
    }
    return kDefaultSeed;
}

long RationalSampler::uniform(long lo, long hi)
{
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<long>(x % span);
}

Rational RationalSampler::nonzero_rational()
{
    long p = uniform(-10, 9);
    if (p >= 0) ++p;
    return make_rational(p, uniform(1, 10));
}

std::vector<SatakePoint> sample_satake_points(const CaseData& c, std::size_t count, std::uint64_t seed)
{
    RationalSampler rng(seed);
    std::vector<SatakePoint> out;
    const SatakePoint id = identity_point(c);
    const std::size_t n = id.semisimple.size();
    auto fresh = [&](const std::string& label) {
        SatakePoint s{QVector(n), std::nullopt, label};
        for (auto& x : s.semisimple) x = rng.nonzero_rational();
        if (id.gm) s.gm = rng.nonzero_rational();
        return s;
    };
    if (count > 0) out.push_back(id);
    if (out.size() < count) {
        SatakePoint s = fresh("repeated-all");
        for (auto& x : s.semisimple) x = s.semisimple.front();
        out.push_back(s);
    }
    if (out.size() < count && n >= 2) {
        SatakePoint s = fresh("repeated-pair");
        s.semisimple[1] = s.semisimple[0];
        out.push_back(s);
    }
    while (out.size() < count) out.push_back(fresh("random-" + std::to_string(out.size())));
    return out;
}

std::vector<GL2Satake> sample_gl2(std::size_t count, std::uint64_t seed, bool unimodular)
{
    RationalSampler rng(seed);
    std::vector<GL2Satake> out;
    auto make = [&](Rational a, Rational b) { out.emplace_back(a, unimodular ? Rational(1 / a) : b); };
    if (count > 0) make(1, 1);
    if (out.size() < count) {
        if (unimodular) {
            out.emplace_back(-1, -1);
        } else {
            const Rational r = rng.nonzero_rational();
            make(r, r);
        }
    }
    while (out.size() < count) {
        Rational a = rng.nonzero_rational();
        make(a, rng.nonzero_rational());
    }
    return out;
}

std::vector<Rational> sample_rationals(std::size_t count, std::uint64_t seed, bool exclude_one)
{
    RationalSampler rng(seed);
    std::vector<Rational> out;
    while (out.size() < count) {
        Rational r = rng.nonzero_rational();
        if (exclude_one && r == 1) continue;
        out.push_back(r);
    }
    return out;
}

}  // namespace weakdual
