#include "weakdual/lfactors.hpp"

#include <array>
#include <map>

namespace weakdual {

namespace {

constexpr std::size_t kVars = 8;
using Mono = std::array<int, kVars>;
using Poly = std::map<Mono, Integer>;

Poly var(std::size_t i)
{
    Mono m{};
    m[i] = 1;
    return {{m, 1}};
}

Poly constant(long c)
{
    if (c == 0) return {};
    return {{Mono{}, c}};
}

Poly operator+(Poly a, const Poly& b)
{
    for (const auto& [m, c] : b) {
        auto& slot = a[m];
        slot += c;
        if (slot == 0) a.erase(m);
    }
    return a;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m;
            for (std::size_t i = 0; i < kVars; ++i) m[i] = ma[i] + mb[i];
            auto& slot = r[m];
            slot += ca * cb;
            if (slot == 0) r.erase(m);
        }
    return r;
}

Poly scaled(long c, const Poly& p) { return constant(c) * p; }

int degree_of(const Mono& m)
{
    int d = 0;
    for (int e : m) d += e;
    return d;
}

void all_monomials(int degree, std::size_t i, Mono& cur, std::vector<Mono>& out)
{
    if (i + 1 == kVars) {
        cur[i] = degree;
        out.push_back(cur);
        return;
    }
    for (int k = degree; k >= 0; --k) {
        cur[i] = k;
        all_monomials(degree - k, i + 1, cur, out);
    }
}

std::vector<Mono> monomials_of_degree(int degree)
{
    std::vector<Mono> out;
    if (degree < 0) return out;
    Mono cur{};
    all_monomials(degree, 0, cur, out);
    return out;
}

struct Presentation {
    std::vector<Poly> generators;
    std::vector<std::vector<int>> var_weights;  // torus weight of each variable
};

// Traceless X with x1..x8 = X11 X12 X13 X21 X22 X23 X31 X32 and X33 = −X11 − X22.
Presentation nilcone()
{
    Poly X[3][3];
    const std::size_t slots[8][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}};
    Presentation p;
    for (std::size_t k = 0; k < 8; ++k) {
        X[slots[k][0]][slots[k][1]] = var(k);
        std::vector<int> w(3, 0);
        ++w[slots[k][0]];
        --w[slots[k][1]];
        p.var_weights.push_back(w);
    }
    X[2][2] = scaled(-1, var(0)) + scaled(-1, var(4));
    Poly tr2;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) tr2 = tr2 + X[i][j] * X[j][i];
    Poly det = X[0][0] * (X[1][1] * X[2][2] + scaled(-1, X[1][2] * X[2][1])) +
               scaled(-1, X[0][1] * (X[1][0] * X[2][2] + scaled(-1, X[1][2] * X[2][0]))) +
               X[0][2] * (X[1][0] * X[2][1] + scaled(-1, X[1][1] * X[2][0]));
    p.generators = {tr2, det};
    return p;
}

// Variables a_{ijk} at index 4i + 2j + k.
Presentation hyperdeterminant()
{
    auto a = [](int i, int j, int k) { return var(static_cast<std::size_t>(4 * i + 2 * j + k)); };
    Presentation p;
    for (int idx = 0; idx < 8; ++idx)
        p.var_weights.push_back({idx & 4 ? -1 : 1, idx & 2 ? -1 : 1, idx & 1 ? -1 : 1});
    auto sq = [](const Poly& x) { return x * x; };
    Poly det = sq(a(0, 0, 0)) * sq(a(1, 1, 1)) + sq(a(0, 0, 1)) * sq(a(1, 1, 0)) + sq(a(0, 1, 0)) * sq(a(1, 0, 1)) +
               sq(a(1, 0, 0)) * sq(a(0, 1, 1));
    Poly cross = a(0, 0, 0) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 1) + a(0, 0, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 1) +
                 a(0, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 0) +
                 a(0, 0, 1) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 0) + a(0, 1, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 0, 1);
    Poly four = a(0, 0, 0) * a(0, 1, 1) * a(1, 0, 1) * a(1, 1, 0) + a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0) * a(1, 1, 1);
    p.generators = {det + scaled(-2, cross) + scaled(4, four)};
    return p;
}

std::vector<int> weight_of(const Presentation& p, const Mono& m)
{
    std::vector<int> w(p.var_weights.front().size(), 0);
    for (std::size_t i = 0; i < kVars; ++i)
        for (std::size_t j = 0; j < w.size(); ++j) w[j] += m[i] * p.var_weights[i][j];
    return w;
}

}  // namespace

std::vector<long> ideal_quotient_dimensions(const std::string& which, long max_degree)
{
    Presentation p;
    if (which == "nilcone")
        p = nilcone();
    else if (which == "hyperdeterminant")
        p = hyperdeterminant();
    else
        throw DomainError("unknown ideal '" + which + "'");
    for (const auto& g : p.generators) {
        const int d0 = degree_of(g.begin()->first);
        for (const auto& [m, _] : g)
            if (degree_of(m) != d0) throw DomainError("generator is not homogeneous");
        if (weight_of(p, g.begin()->first) != std::vector<int>(p.var_weights.front().size(), 0))
            throw DomainError("generator is not torus invariant");
    }

    std::vector<long> dims;
    for (long d = 0; d <= max_degree; ++d) {
        const auto cols = monomials_of_degree(static_cast<int>(d));
        // The ideal is torus-stable, so its degree-d piece splits by weight.
        std::map<std::vector<int>, std::map<Mono, std::size_t>> col_index;
        for (const auto& m : cols) {
            auto& block = col_index[weight_of(p, m)];
            block.emplace(m, block.size());
        }
        std::map<std::vector<int>, std::vector<Poly>> rows;
        for (const auto& g : p.generators) {
            const int dg = degree_of(g.begin()->first);
            for (const auto& m : monomials_of_degree(static_cast<int>(d) - dg)) {
                Poly mono{{m, 1}};
                rows[weight_of(p, m)].push_back(g * mono);
            }
        }
        long rank_total = 0;
        for (const auto& [w, polys] : rows) {
            const auto& idx = col_index.at(w);
            QMatrix mat(polys.size(), idx.size());
            for (std::size_t r = 0; r < polys.size(); ++r)
                for (const auto& [m, c] : polys[r]) mat(r, idx.at(m)) = Rational(c);
            rank_total += static_cast<long>(rank(mat));
        }
        dims.push_back(static_cast<long>(cols.size()) - rank_total);
    }
    return dims;
}

}  // namespace weakdual
