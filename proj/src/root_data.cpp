#include "weakdual/root_data.hpp"

#include <map>
#include <set>

namespace weakdual {

namespace {

void require(bool ok, const std::string& case_name, const std::string& what)
{
    if (!ok) throw CatalogError("case '" + case_name + "': " + what);
}

QVector column_sum(const std::vector<QVector>& vs, const std::vector<long>& coeffs, std::size_t n)
{
    QVector r(n);
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (coeffs[i] != 0) r = add(r, scale(Rational(coeffs[i]), vs[i]));
    return r;
}

std::vector<std::vector<long>> positive_roots_of(const std::vector<std::vector<long>>& C)
{
    const std::size_t n = C.size();
    std::set<std::vector<long>> found;
    std::vector<std::vector<long>> level;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        found.insert(e);
        level.push_back(e);
    }
    while (!level.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& beta : level) {
            for (std::size_t i = 0; i < n; ++i) {
                long p = 0;
                for (;;) {
                    auto down = beta;
                    down[i] -= p + 1;
                    if (!found.count(down)) break;
                    ++p;
                }
                long pairing = 0;
                for (std::size_t k = 0; k < n; ++k) pairing += beta[k] * C[k][i];
                if (p - pairing > 0) {
                    auto up = beta;
                    up[i] += 1;
                    if (found.insert(up).second) next.push_back(up);
                }
            }
        }
        level = std::move(next);
    }
    return {found.begin(), found.end()};
}

// d_i = (α_i, α_i)/2 with C_ij d_j = C_ji d_i, normalized to 1 on one node per component.
QVector symmetrizer(const std::vector<std::vector<long>>& C, const std::string& name)
{
    const std::size_t n = C.size();
    QVector d(n);
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        d[s] = 1;
        seen[s] = true;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || C[i][j] == 0) continue;
                require(C[j][i] != 0, name, "Cartan matrix is not symmetrizable");
                Rational dj = Rational(C[j][i]) * d[i] / Rational(C[i][j]);
                if (!seen[j]) {
                    d[j] = dj;
                    seen[j] = true;
                    stack.push_back(j);
                } else {
                    require(d[j] == dj, name, "Cartan matrix is not symmetrizable");
                }
            }
        }
    }
    for (const auto& x : d) require(x > 0, name, "symmetrizer must be positive");
    return d;
}

}  // namespace

Rational pair(const CaseData& c, const WeightVector& w, const CoweightVector& x)
{
    if (w.size() != c.rank || x.size() != c.rank) throw DimensionError("pair: rank mismatch in case " + c.name);
    return dot(w.coords(), c.pairing.apply(x.coords()));
}

CaseConstants derived_constants(const CaseData& c)
{
    if (c.simple_roots.empty()) throw DomainError("case '" + c.name + "' has no roots; a is undefined");
    CaseConstants k;
    k.a = pair(c, c.rho, c.rho_check);
    if (k.a == 1) throw DomainError("case '" + c.name + "': a = 1, gamma = 1/(a-1) is undefined");
    k.gamma = 1 / (k.a - 1);
    k.gimel = (2 * k.a - 1) * (2 * k.a - 3) / (2 * k.a - 2);
    k.eigenform_power = 2 * k.a - 1;
    k.epsilon = k.eigenform_power * k.gamma;
    k.dim_U = static_cast<long>(c.positive_roots.size());
    k.dim_G = static_cast<long>(c.rank) + 2 * k.dim_U;
    k.dim_G_mod_U = k.dim_G - k.dim_U;
    k.discrepancy_exponent = Rational(k.dim_G_mod_U) - k.epsilon;
    return k;
}

QVector simple_coordinates(const CaseData& c, const WeightVector& w)
{
    QVector x(c.semisimple_rank());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = pair(c, w, c.simple_coroots[i]);
    return x;
}

QVector simple_coordinates(const CaseData& c, const CoweightVector& v)
{
    QVector x(c.semisimple_rank());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = pair(c, c.simple_roots[i], v);
    return x;
}

bool is_dominant(const CaseData& c, const WeightVector& w)
{
    for (const auto& x : simple_coordinates(c, w))
        if (x < 0) return false;
    return true;
}

bool is_dominant(const CaseData& c, const CoweightVector& v)
{
    for (const auto& x : simple_coordinates(c, v))
        if (x < 0) return false;
    return true;
}

WeightVector apply_minus_w0(const CaseData& c, const WeightVector& w)
{
    if (w.size() != c.rank) throw DimensionError("apply_minus_w0: rank mismatch");
    return WeightVector(c.minus_w0.apply(w.coords()));
}

CoweightVector apply_minus_w0(const CaseData& c, const CoweightVector& v)
{
    if (v.size() != c.rank) throw DimensionError("apply_minus_w0: rank mismatch");
    return CoweightVector(c.minus_w0_coweights.apply(v.coords()));
}

WeightVector reflect(const CaseData& c, std::size_t i, const WeightVector& w)
{
    return WeightVector(c.weyl_generators.at(i).apply(w.coords()));
}

CoweightVector reflect(const CaseData& c, std::size_t i, const CoweightVector& v)
{
    return CoweightVector(c.weyl_generators_coweights.at(i).apply(v.coords()));
}

WeightVector dominant_representative(const CaseData& c, WeightVector w)
{
    for (;;) {
        auto x = simple_coordinates(c, w);
        std::size_t i = 0;
        while (i < x.size() && x[i] >= 0) ++i;
        if (i == x.size()) return w;
        w = reflect(c, i, w);
    }
}

bool is_lattice(const CaseData& c, const WeightVector& w)
{
    for (const auto& e : c.integrality_forms.apply(w.coords()))
        if (!is_integer(e)) return false;
    return true;
}

bool is_lattice(const CaseData& c, const CoweightVector& v)
{
    for (const auto& e : c.coweight_integrality_forms.apply(v.coords()))
        if (!is_integer(e)) return false;
    return true;
}

std::vector<long> lattice_exponents(const CaseData& c, const WeightVector& w)
{
    if (w.size() != c.rank) throw DimensionError("lattice_exponents: rank mismatch");
    std::vector<long> out;
    for (const auto& e : c.integrality_forms.apply(w.coords())) {
        if (!is_integer(e)) throw DomainError("weight " + to_string(w) + " is not in the lattice of " + c.name);
        out.push_back(to_long(e.get_num()));
    }
    return out;
}

WeightVector duality_image(const CaseData& c, const CoweightVector& x)
{
    if (!c.duality_map) throw CatalogError("case '" + c.name + "' has no duality identification");
    return WeightVector(c.duality_map->apply(x.coords()));
}

CaseData build_case(CaseSpec spec)
{
    const std::string& nm = spec.name;
    const std::size_t r = spec.rank;
    const std::size_t n = spec.simple_roots.size();
    require(!nm.empty(), "?", "missing name");
    require(r >= 1, nm, "rank must be positive");
    require(spec.pairing.rows() == r && spec.pairing.cols() == r, nm, "pairing must be r x r");
    require(determinant(spec.pairing) != 0, nm, "pairing must be nondegenerate");
    require(spec.simple_coroots.size() == n, nm, "roots and coroots differ in number");
    require(spec.cartan.size() == n, nm, "Cartan matrix has the wrong size");
    for (const auto& row : spec.cartan) require(row.size() == n, nm, "Cartan matrix has the wrong size");
    for (const auto& v : spec.simple_roots) require(v.size() == r, nm, "root of wrong length");
    for (const auto& v : spec.simple_coroots) require(v.size() == r, nm, "coroot of wrong length");
    require(spec.lattice_basis.size() == r, nm, "lattice basis must have r vectors");
    for (const auto& v : spec.lattice_basis) require(v.size() == r, nm, "lattice basis vector of wrong length");
    require(spec.minus_w0.rows() == r && spec.minus_w0.cols() == r, nm, "minus_w0 must be r x r");
    require(spec.theta.has_value() == spec.theta_check.has_value(), nm, "theta and theta_check come together");
    if (spec.theta) require(spec.theta->size() == r && spec.theta_check->size() == r, nm, "theta of wrong length");
    if (spec.duality_map)
        require(spec.duality_map->rows() == r && spec.duality_map->cols() == r, nm, "duality map must be r x r");
    if (spec.satake_has_gm) require(spec.theta.has_value(), nm, "a Gm Satake coordinate needs theta");

    CaseData c;
    c.name = nm;
    c.rank = r;
    c.pairing = spec.pairing;
    c.cartan = spec.cartan;
    for (const auto& v : spec.simple_roots) c.simple_roots.emplace_back(v);
    for (const auto& v : spec.simple_coroots) c.simple_coroots.emplace_back(v);
    if (spec.theta) {
        c.theta = WeightVector(*spec.theta);
        c.theta_check = CoweightVector(*spec.theta_check);
    }
    c.minus_w0 = spec.minus_w0;
    c.dual_case = spec.dual_case;
    c.duality_map = spec.duality_map;

    const QMatrix B = QMatrix::from_columns(spec.lattice_basis);
    require(determinant(B) != 0, nm, "lattice basis is degenerate");
    c.integrality_forms = inverse(B);
    c.coweight_integrality_forms = B.transpose() * c.pairing;
    c.coweight_lattice_basis = inverse(c.coweight_integrality_forms);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            require(pair(c, c.simple_roots[i], c.simple_coroots[j]) == c.cartan[i][j], nm,
                    "<alpha_i, coroot_j> disagrees with the Cartan matrix");
    for (const auto& a : c.simple_roots) require(is_lattice(c, a), nm, "simple root outside the lattice");
    for (const auto& a : c.simple_coroots) require(is_lattice(c, a), nm, "simple coroot outside the lattice");

    // Fundamental weights/coweights inside the root/coroot span.
    QMatrix Cq(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) Cq(i, j) = c.cartan[i][j];
    const QMatrix Cinv = n ? inverse(Cq) : QMatrix();
    for (std::size_t i = 0; i < n; ++i) {
        QVector w(r), x(r);
        for (std::size_t k = 0; k < n; ++k) {
            w = add(w, scale(Cinv(i, k), spec.simple_roots[k]));
            x = add(x, scale(Cinv(k, i), spec.simple_coroots[k]));
        }
        c.fundamental_weights.emplace_back(w);
        c.fundamental_coweights.emplace_back(x);
    }

    c.positive_roots = positive_roots_of(c.cartan);
    const QVector d = symmetrizer(c.cartan, nm);
    c.form = QMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c.form(i, j) = Cinv(i, j) * d[j];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) require(c.form(i, j) == c.form(j, i), nm, "invariant form is not symmetric");

    QVector rho2(r), rhoc2(r);
    for (const auto& beta : c.positive_roots) {
        QVector root = column_sum(spec.simple_roots, beta, r);
        Rational len = 0;  // (β,β)/2
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) len += Rational(beta[i] * beta[j] * c.cartan[i][j]) * d[j];
        len /= 2;
        QVector coroot(r);
        for (std::size_t i = 0; i < n; ++i)
            if (beta[i]) coroot = add(coroot, scale(Rational(beta[i]) * d[i] / len, spec.simple_coroots[i]));
        c.positive_root_vectors.emplace_back(root);
        c.positive_coroots.emplace_back(coroot);
        require(pair(c, c.positive_root_vectors.back(), c.positive_coroots.back()) == 2, nm,
                "positive root does not pair to 2 with its coroot");
        rho2 = add(rho2, root);
        rhoc2 = add(rhoc2, coroot);
    }
    c.rho = WeightVector(scale(Rational(1, 2), rho2));
    c.rho_check = CoweightVector(scale(Rational(1, 2), rhoc2));
    for (std::size_t i = 0; i < n; ++i) {
        require(pair(c, c.rho, c.simple_coroots[i]) == 1, nm, "<rho, coroot> != 1");
        require(pair(c, c.simple_roots[i], c.rho_check) == 1, nm, "<alpha, rho_check> != 1");
    }

    c.n_alpha.resize(n);
    c.n_alpha_check.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            c.n_alpha[k] += Cinv(i, k);
            c.n_alpha_check[k] += Cinv(k, i);
        }
    {
        WeightVector s = WeightVector::zero(r);
        CoweightVector t = CoweightVector::zero(r);
        for (std::size_t k = 0; k < n; ++k) {
            s = s + c.n_alpha[k] * c.simple_roots[k];
            t = t + c.n_alpha_check[k] * c.simple_coroots[k];
        }
        require(s == c.rho, nm, "rho != sum n_alpha alpha");
        require(t == c.rho_check, nm, "rho_check != sum n_alpha_check coroot");
    }

    const QMatrix I = QMatrix::identity(r);
    for (std::size_t i = 0; i < n; ++i) {
        const QVector pa = c.pairing.apply(spec.simple_coroots[i]);
        const QVector pta = c.pairing.transpose().apply(spec.simple_roots[i]);
        QMatrix s = I, t = I;
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) {
                s(a, b) -= spec.simple_roots[i][a] * pa[b];
                t(a, b) -= spec.simple_coroots[i][a] * pta[b];
            }
        c.weyl_generators.push_back(s);
        c.weyl_generators_coweights.push_back(t);
    }

    // w0 as the word carrying -ρ to ρ; -w0 must match the stored matrix.
    {
        QMatrix w0 = I, w0c = I;
        WeightVector v = -c.rho;
        for (;;) {
            auto x = simple_coordinates(c, v);
            std::size_t i = 0;
            while (i < n && x[i] >= 0) ++i;
            if (i == n) break;
            v = reflect(c, i, v);
            w0 = c.weyl_generators[i] * w0;
            w0c = c.weyl_generators_coweights[i] * w0c;
        }
        QMatrix m(r, r), mc(r, r);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) {
                m(a, b) = -w0(a, b);
                mc(a, b) = -w0c(a, b);
            }
        require(m == c.minus_w0, nm, "stored minus_w0 disagrees with -w0");
        require(c.minus_w0 * c.minus_w0 == I, nm, "minus_w0 does not square to the identity");
        for (const auto& w : c.fundamental_weights)
            require(is_dominant(c, apply_minus_w0(c, w)), nm, "minus_w0 does not preserve dominance");
        c.minus_w0_coweights = mc;
        require(c.minus_w0.transpose() * c.pairing * mc == c.pairing, nm, "minus_w0 does not preserve the pairing");
    }

    if (c.theta) {
        require(pair(c, *c.theta, *c.theta_check) == 1, nm, "<theta, theta_check> != 1");
        for (const auto& a : c.simple_coroots) require(pair(c, *c.theta, a) == 0, nm, "theta is not central");
        for (const auto& a : c.simple_roots) require(pair(c, a, *c.theta_check) == 0, nm, "theta_check is not central");
        require(is_lattice(c, *c.theta), nm, "theta is not a character");
        c.rho_check_prime = c.rho_check + *c.theta_check;
    }

    if (n > 0 && pair(c, c.rho, c.rho_check) != 1) {
        c.constants = derived_constants(c);
        if (c.theta && c.constants->a > 1) c.grading_cochar = (-c.constants->gamma) * *c.theta_check;
    }

    c.spec = std::move(spec);
    return c;
}

void validate_duality(const CaseData& c, const CaseData& dual)
{
    const std::string nm = c.name + "/" + dual.name;
    require(c.dual_case == dual.name && dual.dual_case == c.name, nm, "dual_case links are not mutual");
    require(c.duality_map && dual.duality_map, nm, "both sides need a duality identification");
    require(c.rank == dual.rank, nm, "ranks differ");
    const QMatrix& D = *c.duality_map;       // X_*(T) -> X*(Ť)
    const QMatrix& Dd = *dual.duality_map;   // X_*(Ť) -> X*(T)
    const QMatrix E = inverse(Dd);           // X*(T) -> X_*(Ť)
    require(c.pairing.transpose() == D.transpose() * dual.pairing * E, nm, "identifications do not respect the pairings");
    require(c.semisimple_rank() == dual.semisimple_rank(), nm, "semisimple ranks differ");
    for (std::size_t i = 0; i < c.semisimple_rank(); ++i) {
        require(duality_image(c, c.simple_coroots[i]) == dual.simple_roots[i], nm, "coroots do not map to dual roots");
        require(duality_image(dual, dual.simple_coroots[i]) == c.simple_roots[i], nm, "dual coroots do not map to roots");
    }
    const QMatrix T = dual.integrality_forms * D * c.coweight_lattice_basis;
    require(T.is_integral() && inverse(T).is_integral(), nm, "coweight lattice does not map onto the dual weight lattice");
    require(D * c.minus_w0_coweights == dual.minus_w0 * D, nm, "identification does not intertwine -w0");
    require(c.constants && dual.constants, nm, "both sides need constants");
    require(c.constants->a == dual.constants->a, nm, "a differs across the pair");
    const Rational g = c.constants->gamma;
    require(c.theta && dual.theta, nm, "both sides need theta");
    require(WeightVector(E.apply(c.theta->coords())).coords() == (g * *dual.theta_check).coords(), nm,
            "theta does not correspond to gamma * dual theta_check");
    require(duality_image(c, g * *c.theta_check) == *dual.theta, nm,
            "dual theta does not correspond to gamma * theta_check");
}

}  // namespace weakdual
