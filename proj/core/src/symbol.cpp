#include "symgap/symbol.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace symgap {

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long symmetric_dim(int n, int k) { return binomial(n + k - 1, k); }

std::vector<Exponents> multi_indices(int n, int k) {
    std::vector<Exponents> out;
    Exponents cur(n, 0);
    // lexicographic enumeration by recursion on the first entry
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == n - 1) {
            cur[pos] = static_cast<unsigned>(rem);
            out.push_back(cur);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            cur[pos] = static_cast<unsigned>(v);
            rec(pos + 1, rem - v);
        }
    };
    if (n > 0) rec(0, k);
    else if (k == 0) out.push_back(cur);
    return out;
}

namespace {

std::map<Exponents, int> index_of(const std::vector<Exponents>& list) {
    std::map<Exponents, int> m;
    for (int i = 0; i < static_cast<int>(list.size()); ++i) m[list[i]] = i;
    return m;
}

// Row space annihilator: all phi with <b, phi> = 0 for every basis vector b.
std::vector<std::vector<Rational>> annihilator(const SymbolSpace& g) {
    long m = g.ambient_dim();
    SparseMatrix<Rational> rows(g.dim(), static_cast<int>(m));
    for (int r = 0; r < g.dim(); ++r)
        for (long c = 0; c < m; ++c)
            if (!is_zero(g.basis[r][c])) rows.set(r, static_cast<int>(c), g.basis[r][c]);
    return kernel_basis(rows);
}

} // namespace

SymbolSpace full_symbol_space(int n, int w, int k) {
    SymbolSpace g{n, w, k, {}};
    long m = g.ambient_dim();
    g.basis.assign(m, std::vector<Rational>(m, Rational(0)));
    for (long i = 0; i < m; ++i) g.basis[i][i] = 1;
    return g;
}

SymbolSpace prolong(const SymbolSpace& g) {
    const int n = g.n, w = g.w;
    auto lo = multi_indices(n, g.k);      // order-k indices (target of contraction)
    auto hi = multi_indices(n, g.k + 1);  // order-(k+1) indices
    auto lo_idx = index_of(lo);

    auto ann = annihilator(g);
    long cols = static_cast<long>(hi.size()) * w;

    // Constraints: for each direction i and each annihilator functional phi,
    // <phi, delta_i(u)> = 0 where (delta_i u)_{tau,a} = (tau_i + 1) u_{tau+e_i, a}.
    SparseMatrix<Rational> con(static_cast<int>(ann.size()) * n, static_cast<int>(cols));
    int row = 0;
    for (int i = 0; i < n; ++i) {
        for (const auto& phi : ann) {
            for (size_t t = 0; t < lo.size(); ++t) {
                Exponents sigma = lo[t];
                unsigned mult = sigma[i] + 1;
                sigma[i] += 1;
                auto it = std::lower_bound(hi.begin(), hi.end(), sigma,
                                           [](const Exponents& a, const Exponents& b) { return a > b; });
                // hi is in the same lexicographic (descending-first-entry) order
                // as produced by multi_indices; locate sigma.
                long s = -1;
                if (it != hi.end() && *it == sigma) s = it - hi.begin();
                for (int a = 0; a < w; ++a) {
                    const Rational& c = phi[t * w + a];
                    if (!is_zero(c)) con.add(row, static_cast<int>(s * w + a), Rational(mult) * c);
                }
            }
            ++row;
        }
    }

    SymbolSpace out{n, w, g.k + 1, kernel_basis(con)};
    return out;
}

SymbolSequence prolongation_sequence(const SymbolSpace& g, int cap) {
    SymbolSequence seq;
    seq.spaces.push_back(g);
    for (int step = 0; step < cap; ++step) {
        if (seq.spaces.back().dim() == 0) {
            seq.terminated = true;
            return seq;
        }
        seq.spaces.push_back(prolong(seq.spaces.back()));
    }
    if (seq.spaces.back().dim() == 0) seq.terminated = true;
    else seq.capped = true;
    return seq;
}

SymbolSpace killing_symbol(int n, int d) {
    auto deg_d = multi_indices(n, d);
    auto deg_d1 = index_of(multi_indices(n, d + 1));
    int w = static_cast<int>(deg_d.size());

    // u in T* ⊗ S^d T with coordinates u_{i,tau}; the symbol map sends u to
    // rho |-> sum_{i: rho_i > 0} u_{i, rho - e_i}.
    SparseMatrix<Rational> m(static_cast<int>(deg_d1.size()), n * w);
    for (const auto& [rho, r] : deg_d1) {
        for (int i = 0; i < n; ++i) {
            if (rho[i] == 0) continue;
            Exponents tau = rho;
            tau[i] -= 1;
            int t = static_cast<int>(std::lower_bound(deg_d.begin(), deg_d.end(), tau,
                        [](const Exponents& a, const Exponents& b) { return a > b; }) - deg_d.begin());
            m.add(r, i * w + t, Rational(1));
        }
    }

    SymbolSpace g{n, w, 1, kernel_basis(m)};
    return g;
}

int dimension_bound(const SymbolSequence& seq, int g0_dim) {
    if (seq.capped) throw NotFiniteType("prolongation did not terminate within the cap");
    return dimension_bound(seq.dims(), g0_dim);
}

int dimension_bound(const std::vector<int>& dims, int g0_dim) {
    int total = g0_dim;
    for (int d : dims) total += d;
    return total;
}

namespace {

// coordinate of (sigma = e_i, a) inside S^1 T* ⊗ R^w with w = n
long e_coord(int n, int i, int a) {
    // multi_indices(n, 1) lists e_0, e_1, ..., e_{n-1} in this order
    return static_cast<long>(i) * n + a;
}

} // namespace

SymbolSpace so_symbol(int n) {
    SymbolSpace g{n, n, 1, {}};
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::vector<Rational> v(g.ambient_dim(), Rational(0));
            v[e_coord(n, a, b)] = 1;
            v[e_coord(n, b, a)] = -1;
            g.basis.push_back(std::move(v));
        }
    return g;
}

SymbolSpace co_symbol(int n) {
    SymbolSpace g = so_symbol(n);
    std::vector<Rational> id(g.ambient_dim(), Rational(0));
    for (int a = 0; a < n; ++a) id[e_coord(n, a, a)] = 1;
    g.basis.push_back(std::move(id));
    return g;
}

SymbolSpace gl_symbol(int n) { return full_symbol_space(n, n, 1); }

SymbolSpace sl_symbol(int n) {
    SymbolSpace g{n, n, 1, {}};
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a) {
            if (i == a) continue;
            std::vector<Rational> v(g.ambient_dim(), Rational(0));
            v[e_coord(n, i, a)] = 1;
            g.basis.push_back(std::move(v));
        }
    for (int i = 1; i < n; ++i) {
        std::vector<Rational> v(g.ambient_dim(), Rational(0));
        v[e_coord(n, 0, 0)] = 1;
        v[e_coord(n, i, i)] = -1;
        g.basis.push_back(std::move(v));
    }
    return g;
}

} // namespace symgap
