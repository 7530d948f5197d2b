#pragma once

#include "weakdual/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weakdual {

// Σ_{d ≤ trunc} c_d t^d.
class GradedSeries {
public:
    GradedSeries() = default;
    explicit GradedSeries(long trunc);
    GradedSeries(long trunc, QVector coeffs);
    static GradedSeries one(long trunc);
    static GradedSeries monomial(long trunc, long degree, const Rational& c);
    // (1 − e t^d)^{-1}
    static GradedSeries geometric(long trunc, const Rational& e, long degree = 1);

    long trunc() const { return trunc_; }
    const QVector& coeffs() const { return coeffs_; }
    const Rational& operator[](long d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
    Rational& operator[](long d) { return coeffs_.at(static_cast<std::size_t>(d)); }

    GradedSeries operator+(const GradedSeries& o) const;
    GradedSeries operator-(const GradedSeries& o) const;
    GradedSeries operator*(const GradedSeries& o) const;
    GradedSeries inverse() const;
    GradedSeries truncated(long trunc) const;
    bool operator==(const GradedSeries& o) const = default;

    std::optional<long> first_difference(const GradedSeries& o) const;

private:
    long trunc_ = 0;
    QVector coeffs_;
};

// Σ_{n ≤ trunc} c_n u^{−n}, u = q^{1/2}; n may be negative.
class HalfPowerSeries {
public:
    HalfPowerSeries() = default;
    explicit HalfPowerSeries(long trunc) : trunc_(trunc) {}
    static HalfPowerSeries from_graded(const GradedSeries& g);

    long trunc() const { return trunc_; }
    const std::map<long, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(long n) const;
    void add(long n, const Rational& c);

    HalfPowerSeries operator*(const HalfPowerSeries& o) const;
    // Multiplies by c·u^{−shift}.
    HalfPowerSeries scaled(const Rational& c, long shift) const;
    HalfPowerSeries truncated(long trunc) const;
    bool operator==(const HalfPowerSeries& o) const;
    std::optional<long> first_difference(const HalfPowerSeries& o) const;

private:
    long trunc_ = 0;
    std::map<long, Rational> coeffs_;
};

}  // namespace weakdual
