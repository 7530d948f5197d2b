#pragma once

#include "weakdual/rep_theory.hpp"
#include "weakdual/series.hpp"

#include <memory>
#include <string>
#include <vector>

namespace weakdual {

enum class SpaceKind { relevant_cone, scaling_line, standard, tensor_square, rank_one_tensor };

// A conical variety with a grading: its coordinate ring in degree d is a sum of
// irreducible representations of `group`.
struct SpectralSpace {
    std::string name;
    SpaceKind kind = SpaceKind::relevant_cone;
    const CaseData* group = nullptr;
};

// Case names with a cone structure, plus "A1", "A2", "A3", "A2xA2", "rank_one_2x2".
SpectralSpace spectral_space(const std::string& name);
std::vector<std::string> spectral_space_names();

struct Component {
    WeightVector highest_weight;
    long multiplicity = 1;
};

std::vector<Component> graded_components(const SpectralSpace& space, long degree);

// Characters of the graded pieces in degrees 0..trunc, reusable across Satake points.
class GradedCharacter {
public:
    GradedCharacter(const SpectralSpace& space, long trunc);
    GradedCharacter(const CaseData& group, std::vector<std::vector<Component>> by_degree);

    long trunc() const { return static_cast<long>(pieces_.size()) - 1; }
    const LaurentPolynomial& piece(long d) const { return pieces_.at(static_cast<std::size_t>(d)); }
    GradedSeries evaluate(const SatakePoint& s) const;
    GradedSeries dimensions() const;

private:
    const CaseData* group_;
    std::vector<LaurentPolynomial> pieces_;
};

std::shared_ptr<const GradedCharacter> graded_character(const SpectralSpace& space, long trunc);

GradedSeries nonlinear_local_factor(const SpectralSpace& space, const SatakePoint& s, long trunc);
// The relevant-cone space of a graded case.
GradedSeries nonlinear_local_factor(const CaseData& c, const SatakePoint& s, long trunc);

GradedSeries linear_local_factor(const QVector& eigenvalues, long trunc);

struct InvariantSpec {
    long degree = 2;
    WeightVector weight;
};

struct EvaluatedInvariant {
    long degree = 2;
    Rational value;
};

std::vector<EvaluatedInvariant> evaluate_invariants(const CaseData& c, const std::vector<InvariantSpec>& specs,
                                                    const SatakePoint& s);
GradedSeries lci_local_factor(const QVector& ambient_eigenvalues, const std::vector<EvaluatedInvariant>& invariants,
                              long trunc);

// Ambient representation and defining semi-invariants of a complete-intersection cone.
struct LciPresentation {
    WeightVector ambient_highest_weight;
    std::vector<InvariantSpec> invariants;
};

LciPresentation lci_presentation(const CaseData& c);
QVector ambient_eigenvalues(const CaseData& c, const LciPresentation& p, const SatakePoint& s);
// Eigenvalues of the defining representation of a linear space at s.
QVector standard_eigenvalues(const SpectralSpace& space, const SatakePoint& s);

GradedSeries hilbert_series(const SpectralSpace& space, long trunc);
GradedSeries hilbert_series(const CaseData& c, long trunc);

// Graded dimensions of k[x_1..x_8]/(P_j) by linear algebra on the explicit
// generators: "nilcone" (trace of X², det X on traceless 3×3) or
// "hyperdeterminant" (Cayley's quartic on 2×2×2 tensors).
std::vector<long> ideal_quotient_dimensions(const std::string& which, long max_degree);

}  // namespace weakdual
