#pragma once

#include "weakdual/root_data.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace weakdual {

// Torus point given by the values of the case's lattice-basis characters.
// For cases with a Gm coordinate, `semisimple` holds all but the last basis
// character and `gm` the last; otherwise `gm` is empty.
struct SatakePoint {
    QVector semisimple;
    std::optional<Rational> gm;
    std::string label;
};

SatakePoint identity_point(const CaseData& c);
// Flattened basis values; DimensionError on shape mismatch, DomainError on a zero entry.
QVector satake_values(const CaseData& c, const SatakePoint& s);
Rational evaluate_weight(const CaseData& c, const WeightVector& w, const SatakePoint& s);

struct MultiplicityTable {
    WeightVector highest_weight;
    std::map<WeightVector, long> entries;
    long dimension() const;
};

// Freudenthal recursion on dominant weights, extended to full Weyl orbits. Memoized.
std::shared_ptr<const MultiplicityTable> weight_multiplicities(const CaseData& c, const WeightVector& lambda);
// Zero for non-dominant λ.
Rational character_value(const CaseData& c, const WeightVector& lambda, const SatakePoint& s);
Integer weyl_dimension(const CaseData& c, const WeightVector& lambda);

// Finite Laurent polynomial in the lattice-basis character coordinates.
class LaurentPolynomial {
public:
    using Monomial = std::vector<long>;

    void add_term(const Monomial& m, const Integer& coeff);
    void add_character(const CaseData& c, const WeightVector& lambda, const Integer& mult = 1);
    Rational evaluate(const QVector& values) const;
    Integer value_at_one() const;
    const std::map<Monomial, Integer>& terms() const { return terms_; }
    bool operator==(const LaurentPolynomial&) const = default;

private:
    std::map<Monomial, Integer> terms_;
};

enum class InvariantModel { primary, alternate };

struct BruteforceBounds {
    long max_degree = 4;
    long max_coordinate = 12;
};

// dim V_λ^S with S = T⁰U⁰, by exact linear algebra on an explicit model of V_λ.
long invariant_dimension_bruteforce(const CaseData& c, const WeightVector& lambda,
                                    InvariantModel model = InvariantModel::primary,
                                    const BruteforceBounds& bounds = {});

}  // namespace weakdual
