#include "weakdual/rep_theory.hpp"

#include <functional>
#include <map>

namespace weakdual {

namespace {

using State = std::vector<long>;
using Image = std::vector<std::pair<State, long>>;  // target state, coefficient
using Operator = std::function<Image(const State&)>;

// Enumerates compositions of `total` into `parts` nonnegative pieces.
void compositions(long total, std::size_t parts, State& cur, std::vector<State>& out)
{
    if (cur.size() + 1 == parts) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long k = total; k >= 0; --k) {
        cur.push_back(k);
        compositions(total - k, parts, cur, out);
        cur.pop_back();
    }
}

std::vector<State> product_states(const std::vector<State>& a, const std::vector<State>& b)
{
    std::vector<State> out;
    for (const auto& x : a)
        for (const auto& y : b) {
            State s = x;
            s.insert(s.end(), y.begin(), y.end());
            out.push_back(s);
        }
    return out;
}

std::vector<State> monomials(long degree, std::size_t vars)
{
    std::vector<State> out;
    if (degree < 0) return out;
    State cur;
    compositions(degree, vars, cur, out);
    return out;
}

// dim of the joint kernel of the operators restricted to span(domain).
long joint_kernel(const std::vector<State>& domain, const std::vector<Operator>& ops)
{
    if (domain.empty()) return 0;
    std::map<std::pair<std::size_t, State>, std::size_t> target_index;
    std::vector<std::vector<std::pair<std::size_t, long>>> rows(domain.size());
    for (std::size_t d = 0; d < domain.size(); ++d)
        for (std::size_t o = 0; o < ops.size(); ++o)
            for (const auto& [t, coeff] : ops[o](domain[d])) {
                auto key = std::make_pair(o, t);
                auto it = target_index.find(key);
                if (it == target_index.end()) it = target_index.emplace(key, target_index.size()).first;
                rows[d].emplace_back(it->second, coeff);
            }
    if (target_index.empty()) return static_cast<long>(domain.size());
    QMatrix m(domain.size(), target_index.size());
    for (std::size_t d = 0; d < domain.size(); ++d)
        for (const auto& [j, coeff] : rows[d]) m(d, j) += coeff;
    return static_cast<long>(domain.size() - rank(m));
}

Operator combine(Operator a, Operator b, long sb)
{
    return [a, b, sb](const State& s) {
        std::map<State, long> acc;
        for (const auto& [t, k] : a(s)) acc[t] += k;
        for (const auto& [t, k] : b(s)) acc[t] += sb * k;
        Image img;
        for (const auto& [t, k] : acc)
            if (k) img.emplace_back(t, k);
        return img;
    };
}

// E_ij on Sym V ⊗ Sym V*, states (p1,p2,p3,q1,q2,q3): v_j -> v_i, v_i* -> -v_j*.
Operator a2_raising(std::size_t i, std::size_t j)
{
    return [i, j](const State& s) {
        Image img;
        if (s[j] > 0) {
            State t = s;
            --t[j];
            ++t[i];
            img.emplace_back(t, s[j]);
        }
        if (s[3 + i] > 0) {
            State t = s;
            --t[3 + i];
            ++t[3 + j];
            img.emplace_back(t, -s[3 + i]);
        }
        return img;
    };
}

Image a2_contraction(const State& s)
{
    Image img;
    for (std::size_t i = 0; i < 3; ++i)
        if (s[i] > 0 && s[3 + i] > 0) {
            State t = s;
            --t[i];
            --t[3 + i];
            img.emplace_back(t, s[i] * s[3 + i]);
        }
    return img;
}

std::vector<long> a2_xcoords(const State& s)
{
    long e[3];
    for (std::size_t i = 0; i < 3; ++i) e[i] = s[i] - s[3 + i];
    return {e[0] - e[1], e[1] - e[2]};
}

// SL2 factor i on states j (exponent of the second basis vector).
// Standard model: E lowers j with coefficient j and the weight is x - 2j.
// Dual model: monomials in the dual basis, E raises j with coefficient -(x - j), weight 2j - x.
Operator a1_raising(std::size_t i, const std::vector<long>& x, bool dual)
{
    return [i, x, dual](const State& s) {
        Image img;
        State t = s;
        if (!dual && s[i] > 0) {
            --t[i];
            img.emplace_back(t, s[i]);
        } else if (dual && s[i] < x[i]) {
            ++t[i];
            img.emplace_back(t, -(x[i] - s[i]));
        }
        return img;
    };
}

struct T0Filter {
    Rational base;
    QVector coeff;
    std::vector<long> X;

    bool operator()(const std::vector<long>& x) const
    {
        Rational w = base;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] != X[j]) w += coeff[j] * (x[j] - X[j]);
        return w == 0;
    }
};

}  // namespace

long invariant_dimension_bruteforce(const CaseData& c, const WeightVector& lambda, InvariantModel model,
                                    const BruteforceBounds& bounds)
{
    const auto kind = c.spec.model;
    if (kind == SemisimpleModel::none || !c.rho_check_prime || !c.grading_cochar)
        throw DomainError("no explicit model for case " + c.name);
    if (!is_lattice(c, lambda) || !is_dominant(c, lambda))
        throw DomainError("invariant count needs a dominant lattice weight");
    const Rational deg = pair(c, lambda, *c.grading_cochar);
    std::vector<long> X;
    for (const auto& q : simple_coordinates(c, lambda)) X.push_back(to_long_exact(q));
    long biggest = 0;
    for (long v : X) biggest = std::max(biggest, v);
    if (deg > bounds.max_degree || biggest > bounds.max_coordinate)
        throw CapacityError("weight " + to_string(lambda) + " exceeds the brute-force construction bound");

    T0Filter t0{pair(c, lambda, *c.rho_check_prime), {}, X};
    for (const auto& w : c.fundamental_weights) t0.coeff.push_back(pair(c, w, *c.rho_check_prime));

    if (kind == SemisimpleModel::a2) {
        const std::vector<Operator> lie{combine(a2_raising(0, 1), a2_raising(1, 2), -1), a2_raising(0, 2)};
        auto weight_zero = [&](long a, long b) {
            std::vector<State> out;
            for (const auto& s : product_states(monomials(a, 3), monomials(b, 3)))
                if (t0(a2_xcoords(s))) out.push_back(s);
            return out;
        };
        if (model == InvariantModel::primary) {
            auto ops = lie;
            ops.emplace_back(a2_contraction);
            return joint_kernel(weight_zero(X[0], X[1]), ops);
        }
        return joint_kernel(weight_zero(X[0], X[1]), lie) - joint_kernel(weight_zero(X[0] - 1, X[1] - 1), lie);
    }

    const bool dual = model == InvariantModel::alternate;
    std::vector<State> domain;
    State cur(3);
    for (cur[0] = 0; cur[0] <= X[0]; ++cur[0])
        for (cur[1] = 0; cur[1] <= X[1]; ++cur[1])
            for (cur[2] = 0; cur[2] <= X[2]; ++cur[2]) {
                std::vector<long> x(3);
                for (std::size_t i = 0; i < 3; ++i) x[i] = dual ? 2 * cur[i] - X[i] : X[i] - 2 * cur[i];
                if (t0(x)) domain.push_back(cur);
            }
    const std::vector<Operator> lie{combine(a1_raising(0, X, dual), a1_raising(1, X, dual), -1),
                                    combine(a1_raising(1, X, dual), a1_raising(2, X, dual), -1)};
    return joint_kernel(domain, lie);
}

}  // namespace weakdual
