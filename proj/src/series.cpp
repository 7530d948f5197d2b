#include "weakdual/series.hpp"

#include <algorithm>

namespace weakdual {

namespace {

void check_trunc(long t)
{
    if (t < 0) throw DomainError("truncation order must be nonnegative");
}

}  // namespace

GradedSeries::GradedSeries(long trunc) : trunc_(trunc)
{
    check_trunc(trunc);
    coeffs_.assign(static_cast<std::size_t>(trunc + 1), Rational(0));
}

GradedSeries::GradedSeries(long trunc, QVector coeffs) : GradedSeries(trunc)
{
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = coeffs[i];
}

GradedSeries GradedSeries::one(long trunc) { return monomial(trunc, 0, 1); }

GradedSeries GradedSeries::monomial(long trunc, long degree, const Rational& c)
{
    GradedSeries s(trunc);
    if (degree >= 0 && degree <= trunc) s[degree] = c;
    return s;
}

GradedSeries GradedSeries::geometric(long trunc, const Rational& e, long degree)
{
    if (degree <= 0) throw DomainError("geometric series needs a positive degree");
    GradedSeries s(trunc);
    Rational p = 1;
    for (long d = 0; d <= trunc; d += degree) {
        s[d] = p;
        p *= e;
    }
    return s;
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const
{
    GradedSeries r(std::min(trunc_, o.trunc_));
    for (long d = 0; d <= r.trunc_; ++d) r[d] = (*this)[d] + o[d];
    return r;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const
{
    GradedSeries r(std::min(trunc_, o.trunc_));
    for (long d = 0; d <= r.trunc_; ++d) r[d] = (*this)[d] - o[d];
    return r;
}

GradedSeries GradedSeries::operator*(const GradedSeries& o) const
{
    GradedSeries r(std::min(trunc_, o.trunc_));
    for (long i = 0; i <= r.trunc_; ++i) {
        if ((*this)[i] == 0) continue;
        for (long j = 0; i + j <= r.trunc_; ++j) r[i + j] += (*this)[i] * o[j];
    }
    return r;
}

GradedSeries GradedSeries::inverse() const
{
    if (coeffs_.empty() || coeffs_[0] == 0) throw DomainError("series is not a unit");
    GradedSeries r(trunc_);
    r[0] = 1 / coeffs_[0];
    for (long d = 1; d <= trunc_; ++d) {
        Rational s = 0;
        for (long k = 1; k <= d; ++k) s += (*this)[k] * r[d - k];
        r[d] = -s / coeffs_[0];
    }
    return r;
}

GradedSeries GradedSeries::truncated(long trunc) const
{
    GradedSeries r(trunc);
    for (long d = 0; d <= trunc && d <= trunc_; ++d) r[d] = (*this)[d];
    return r;
}

std::optional<long> GradedSeries::first_difference(const GradedSeries& o) const
{
    const long t = std::min(trunc_, o.trunc_);
    for (long d = 0; d <= t; ++d)
        if ((*this)[d] != o[d]) return d;
    return std::nullopt;
}

HalfPowerSeries HalfPowerSeries::from_graded(const GradedSeries& g)
{
    HalfPowerSeries h(g.trunc());
    for (long d = 0; d <= g.trunc(); ++d) h.add(d, g[d]);
    return h;
}

Rational HalfPowerSeries::coeff(long n) const
{
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void HalfPowerSeries::add(long n, const Rational& c)
{
    if (n > trunc_ || c == 0) return;
    auto [it, inserted] = coeffs_.emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

HalfPowerSeries HalfPowerSeries::operator*(const HalfPowerSeries& o) const
{
    // Both factors are only known through their own truncation; the product is
    // exact up to min over each side of (its trunc + lowest exponent of the other).
    long t = std::min(trunc_, o.trunc_);
    if (!coeffs_.empty() && !o.coeffs_.empty())
        t = std::min(trunc_ + o.coeffs_.begin()->first, o.trunc_ + coeffs_.begin()->first);
    HalfPowerSeries r(t);
    for (const auto& [a, x] : coeffs_)
        for (const auto& [b, y] : o.coeffs_) r.add(a + b, x * y);
    return r;
}

HalfPowerSeries HalfPowerSeries::scaled(const Rational& c, long shift) const
{
    HalfPowerSeries r(trunc_ + shift);
    for (const auto& [n, x] : coeffs_) r.add(n + shift, c * x);
    return r;
}

HalfPowerSeries HalfPowerSeries::truncated(long trunc) const
{
    HalfPowerSeries r(trunc);
    for (const auto& [n, x] : coeffs_) r.add(n, x);
    return r;
}

bool HalfPowerSeries::operator==(const HalfPowerSeries& o) const
{
    return trunc_ == o.trunc_ && coeffs_ == o.coeffs_;
}

std::optional<long> HalfPowerSeries::first_difference(const HalfPowerSeries& o) const
{
    const long t = std::min(trunc_, o.trunc_);
    std::optional<long> lo;
    for (const auto* m : {&coeffs_, &o.coeffs_})
        if (!m->empty()) lo = lo ? std::min(*lo, m->begin()->first) : m->begin()->first;
    if (!lo) return std::nullopt;
    for (long n = *lo; n <= t; ++n)
        if (coeff(n) != o.coeff(n)) return n;
    return std::nullopt;
}

}  // namespace weakdual
