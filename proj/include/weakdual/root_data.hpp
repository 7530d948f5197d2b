#pragma once

#include "weakdual/linalg.hpp"
#include "weakdual/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace weakdual {

template <class Tag>
class CoordVector {
public:
    CoordVector() = default;
    explicit CoordVector(QVector coords) : coords_(std::move(coords)) {}
    static CoordVector zero(std::size_t n) { return CoordVector(QVector(n)); }

    const QVector& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    CoordVector operator+(const CoordVector& o) const { return CoordVector(add(coords_, o.coords_)); }
    CoordVector operator-(const CoordVector& o) const { return CoordVector(sub(coords_, o.coords_)); }
    CoordVector operator-() const { return CoordVector(scale(Rational(-1), coords_)); }
    friend CoordVector operator*(const Rational& c, const CoordVector& v) { return CoordVector(scale(c, v.coords_)); }

    friend bool operator==(const CoordVector& a, const CoordVector& b) { return a.coords_ == b.coords_; }
    friend std::strong_ordering operator<=>(const CoordVector& a, const CoordVector& b)
    {
        return compare_vectors(a.coords_, b.coords_);
    }

private:
    QVector coords_;
};

struct WeightTag {};
struct CoweightTag {};
using WeightVector = CoordVector<WeightTag>;
using CoweightVector = CoordVector<CoweightTag>;

template <class Tag>
std::string to_string(const CoordVector<Tag>& v)
{
    return to_string(v.coords());
}

// Explicit matrix models available to the invariant brute force.
enum class SemisimpleModel { none, a2, a1_cubed };

// Raw catalog entry as written by hand or read from JSON; build_case derives
// the rest and checks every structural invariant.
struct CaseSpec {
    std::string name;
    std::string description;
    std::size_t rank = 0;
    QMatrix pairing;
    std::vector<std::vector<long>> cartan;
    std::vector<QVector> simple_roots;
    std::vector<QVector> simple_coroots;
    std::optional<QVector> theta;
    std::optional<QVector> theta_check;
    std::vector<QVector> lattice_basis;  // Z-basis of X*(T); also the Satake monomials
    QMatrix minus_w0;
    std::string dual_case;
    std::optional<QMatrix> duality_map;  // X_*(T) of this case -> X*(T) of the dual
    bool satake_has_gm = false;          // last lattice basis character is the Gm coordinate
    SemisimpleModel model = SemisimpleModel::none;
    // Assert that the fundamental-weight automorphic bounds follow from the ρ−α ones.
    bool convex_hull_simplification = false;
};

struct CaseConstants {
    Rational a, gamma, gimel, epsilon, eigenform_power;
    long dim_G = 0, dim_U = 0, dim_G_mod_U = 0;
    Rational discrepancy_exponent;
};

struct CaseData {
    CaseSpec spec;

    std::string name;
    std::size_t rank = 0;
    QMatrix pairing;
    std::vector<WeightVector> simple_roots;
    std::vector<CoweightVector> simple_coroots;
    std::optional<WeightVector> theta;
    std::optional<CoweightVector> theta_check;
    WeightVector rho;
    CoweightVector rho_check;
    std::optional<CoweightVector> rho_check_prime;
    std::optional<CoweightVector> grading_cochar;
    QVector n_alpha, n_alpha_check;
    std::vector<QMatrix> weyl_generators;           // simple reflections on weights
    std::vector<QMatrix> weyl_generators_coweights;  // simple reflections on coweights
    QMatrix minus_w0;
    QMatrix minus_w0_coweights;
    std::string dual_case;
    std::optional<QMatrix> duality_map;
    QMatrix integrality_forms;          // λ is lattice iff every row pairs integrally
    QMatrix coweight_integrality_forms; // same for χ
    QMatrix coweight_lattice_basis;     // columns

    std::vector<WeightVector> fundamental_weights;
    std::vector<CoweightVector> fundamental_coweights;
    std::vector<std::vector<long>> cartan;
    std::vector<std::vector<long>> positive_roots;  // coordinates on simple roots
    std::vector<WeightVector> positive_root_vectors;
    std::vector<CoweightVector> positive_coroots;
    QMatrix form;  // W-invariant form on fundamental-weight coordinates
    std::optional<CaseConstants> constants;

    std::size_t semisimple_rank() const { return simple_roots.size(); }
};

CaseData build_case(CaseSpec spec);
const CaseData& load_case(const std::string& name);
std::vector<std::string> catalog_names();
// Validates and adds a user case; CatalogError if the name is taken.
const CaseData& register_case(CaseSpec spec);
// Checks the cross-case duality relations of a catalog pair.
void validate_duality(const CaseData& c, const CaseData& dual);

Rational pair(const CaseData& c, const WeightVector& w, const CoweightVector& x);
CaseConstants derived_constants(const CaseData& c);

bool is_dominant(const CaseData& c, const WeightVector& w);
bool is_dominant(const CaseData& c, const CoweightVector& x);
WeightVector apply_minus_w0(const CaseData& c, const WeightVector& w);
CoweightVector apply_minus_w0(const CaseData& c, const CoweightVector& x);
WeightVector reflect(const CaseData& c, std::size_t i, const WeightVector& w);
CoweightVector reflect(const CaseData& c, std::size_t i, const CoweightVector& x);
WeightVector dominant_representative(const CaseData& c, WeightVector w);

bool is_lattice(const CaseData& c, const WeightVector& w);
bool is_lattice(const CaseData& c, const CoweightVector& x);
// Exponents of w in the lattice basis; DomainError when w is not a lattice weight.
std::vector<long> lattice_exponents(const CaseData& c, const WeightVector& w);

// ⟨w, α̌_i⟩ for every simple coroot.
QVector simple_coordinates(const CaseData& c, const WeightVector& w);
QVector simple_coordinates(const CaseData& c, const CoweightVector& x);

WeightVector duality_image(const CaseData& c, const CoweightVector& x);

}  // namespace weakdual
