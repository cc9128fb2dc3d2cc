#include "symgap/geo_integrals.hpp"

#include <algorithm>
#include <functional>

#include "symgap/matrix.hpp"
#include "symgap/sampling.hpp"
#include "symgap/symbol.hpp"

namespace symgap {

namespace {

RationalFunction rf_const(int n, const Rational& c) { return RationalFunction::constant(n, c); }

// determinant of a square RationalFunction matrix by cofactor expansion
RationalFunction dense_det(const std::vector<std::vector<RationalFunction>>& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    RationalFunction det = rf_const(a[0][0].nvars(), Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        std::vector<std::vector<RationalFunction>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<RationalFunction> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        RationalFunction cof = a[0][j] * dense_det(minor);
        if (j % 2 == 1) cof = -cof;
        det = det + cof;
    }
    return det;
}

} // namespace

Metric flat_metric(int n) {
    Metric m;
    m.n = n;
    m.g.assign(n, std::vector<RationalFunction>(n, rf_const(n, Rational(0))));
    for (int i = 0; i < n; ++i) m.g[i][i] = rf_const(n, Rational(1));
    return m;
}

Metric scaled_flat_metric(int n) {
    Metric m = flat_metric(n);
    const RationalFunction x1 = RationalFunction::variable(n, 0);
    for (int i = 0; i < n; ++i) m.g[i][i] = x1;
    return m;
}

Metric rotational_metric(int n, int sign, const Rational& R) {
    Metric m = flat_metric(n);
    Polynomial phi = Polynomial::constant(n, R * R * Rational(sign));
    for (int j = 1; j < n; ++j) {
        Exponents e(static_cast<std::size_t>(n), 0u);
        e[static_cast<std::size_t>(j)] = 2;
        phi.add_term(e, Rational(1));
    }
    const RationalFunction inv_phi2 =
        rf_const(n, Rational(1)) / (RationalFunction(phi) * RationalFunction(phi));
    for (int i = 1; i < n; ++i) m.g[i][i] = inv_phi2;
    return m;
}

Metric revolution_metric(int n, const RationalFunction& f) {
    Metric m = flat_metric(n);
    const RationalFunction f2 = f.extended(n) * f.extended(n);
    for (int i = 1; i < n; ++i) m.g[i][i] = f2;
    return m;
}

void MomentumPolynomial::add_term(const Exponents& alpha, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto it = terms.find(alpha);
    if (it == terms.end()) {
        terms.emplace(alpha, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

MomentumPolynomial MomentumPolynomial::operator+(const MomentumPolynomial& o) const {
    MomentumPolynomial r = *this;
    for (const auto& [a, c] : o.terms) r.add_term(a, c);
    return r;
}

MomentumPolynomial MomentumPolynomial::operator-(const MomentumPolynomial& o) const {
    MomentumPolynomial r = *this;
    for (const auto& [a, c] : o.terms) r.add_term(a, -c);
    return r;
}

MomentumPolynomial MomentumPolynomial::operator*(const MomentumPolynomial& o) const {
    MomentumPolynomial r;
    r.n = n;
    r.degree = degree + o.degree;
    for (const auto& [a, ca] : terms)
        for (const auto& [b, cb] : o.terms) {
            Exponents s(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            r.add_term(s, ca * cb);
        }
    return r;
}

std::string MomentumPolynomial::to_string(const std::vector<std::string>& names) const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [a, c] : terms) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string(names) + ")";
        for (std::size_t i = 0; i < a.size(); ++i)
            for (unsigned k = 0; k < a[i]; ++k) out += "*p" + std::to_string(i + 1);
    }
    return out;
}

MomentumPolynomial momentum_monomial(int n, const Exponents& alpha, const RationalFunction& c) {
    MomentumPolynomial r;
    r.n = n;
    r.degree = static_cast<int>(total_degree(alpha));
    r.add_term(alpha, c);
    return r;
}

MomentumPolynomial geodesic_hamiltonian(const Metric& m) {
    const int n = m.n;
    const RationalFunction det = dense_det(m.g);
    if (det.is_zero()) throw DegenerateMetric("metric determinant vanishes identically");
    MomentumPolynomial h;
    h.n = n;
    h.degree = 2;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            // inverse entry g^{ij} = cofactor(j,i) / det
            std::vector<std::vector<RationalFunction>> minor;
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<RationalFunction> row;
                for (int c = 0; c < n; ++c)
                    if (c != i) row.push_back(m.g[r][c]);
                minor.push_back(std::move(row));
            }
            RationalFunction ginv = n == 1 ? rf_const(n, Rational(1)) / det
                                           : dense_det(minor) / det;
            if ((i + j) % 2 == 1) ginv = -ginv;
            if (ginv.is_zero()) continue;
            Exponents e(static_cast<std::size_t>(n), 0u);
            e[static_cast<std::size_t>(i)] += 1;
            e[static_cast<std::size_t>(j)] += 1;
            // off-diagonal monomials collect g^{ij} + g^{ji}
            h.add_term(e, i == j ? ginv : ginv + ginv);
        }
    return h;
}

MomentumPolynomial poisson_bracket(const MomentumPolynomial& f, const MomentumPolynomial& g) {
    const int n = f.n;
    MomentumPolynomial r;
    r.n = n;
    r.degree = f.degree + g.degree - 1;
    for (int i = 0; i < n; ++i) {
        // dF/dp_i * dG/dx_i  -  dG/dp_i * dF/dx_i
        for (const auto& [a, ca] : f.terms) {
            if (a[static_cast<std::size_t>(i)] == 0) continue;
            Exponents am = a;
            am[static_cast<std::size_t>(i)] -= 1;
            const RationalFunction fa = ca * rf_const(n, Rational(a[static_cast<std::size_t>(i)]));
            for (const auto& [b, cb] : g.terms) {
                Exponents s(am.size());
                for (std::size_t k = 0; k < s.size(); ++k) s[k] = am[k] + b[k];
                r.add_term(s, fa * cb.derivative(i));
            }
        }
        for (const auto& [b, cb] : g.terms) {
            if (b[static_cast<std::size_t>(i)] == 0) continue;
            Exponents bm = b;
            bm[static_cast<std::size_t>(i)] -= 1;
            const RationalFunction gb = cb * rf_const(n, Rational(b[static_cast<std::size_t>(i)]));
            for (const auto& [a, ca] : f.terms) {
                Exponents s(bm.size());
                for (std::size_t k = 0; k < s.size(); ++k) s[k] = bm[k] + a[k];
                r.add_term(s, -(gb * ca.derivative(i)));
            }
        }
    }
    return r;
}

DeterminingSystem determining_system(const Metric& m, int d) {
    const int n = m.n;
    const MomentumPolynomial h = geodesic_hamiltonian(m);
    DeterminingSystem sys;
    sys.n = n;
    sys.d = d;
    sys.unknowns = multi_indices(n, d);
    const std::vector<Exponents> rhos = multi_indices(n, d + 1);
    std::map<Exponents, int> rho_index;
    for (std::size_t i = 0; i < rhos.size(); ++i) rho_index.emplace(rhos[i], static_cast<int>(i));
    sys.equations.assign(rhos.size(), {});

    for (std::size_t s = 0; s < sys.unknowns.size(); ++s) {
        const Exponents& sigma = sys.unknowns[s];
        for (const auto& [alpha, ha] : h.terms) {
            // {H, F} contribution  dH/dp_i * db_sigma/dx_i * p^{alpha-e_i+sigma}
            for (int i = 0; i < n; ++i) {
                const unsigned ai = alpha[static_cast<std::size_t>(i)];
                if (ai == 0) continue;
                Exponents rho(static_cast<std::size_t>(n));
                for (std::size_t k = 0; k < rho.size(); ++k) rho[k] = alpha[k] + sigma[k];
                rho[static_cast<std::size_t>(i)] -= 1;
                sys.equations[static_cast<std::size_t>(rho_index.at(rho))].push_back(
                    {static_cast<int>(s), i, ha * rf_const(n, Rational(ai))});
            }
            // contribution  - dH/dx_i * sigma_i * b_sigma * p^{alpha+sigma-e_i}
            for (int i = 0; i < n; ++i) {
                const unsigned si = sigma[static_cast<std::size_t>(i)];
                if (si == 0) continue;
                const RationalFunction dha = ha.derivative(i);
                if (dha.is_zero()) continue;
                Exponents rho(static_cast<std::size_t>(n));
                for (std::size_t k = 0; k < rho.size(); ++k) rho[k] = alpha[k] + sigma[k];
                rho[static_cast<std::size_t>(i)] -= 1;
                sys.equations[static_cast<std::size_t>(rho_index.at(rho))].push_back(
                    {static_cast<int>(s), -1, -(dha * rf_const(n, Rational(si)))});
            }
        }
    }
    return sys;
}

namespace {

// derivative values d^mu c (x0) for all |mu| <= max_order
std::map<Exponents, Rational> derivative_table(const RationalFunction& c,
                                               const std::vector<Rational>& x0, int max_order) {
    const int n = c.nvars();
    std::map<Exponents, RationalFunction> funcs;
    std::map<Exponents, Rational> vals;
    const Exponents zero(static_cast<std::size_t>(n), 0u);
    funcs.emplace(zero, c);
    vals.emplace(zero, c.evaluate(x0));
    for (int order = 1; order <= max_order; ++order) {
        for (const Exponents& mu : multi_indices(n, order)) {
            int i = 0;
            while (mu[static_cast<std::size_t>(i)] == 0) ++i;
            Exponents parent = mu;
            parent[static_cast<std::size_t>(i)] -= 1;
            RationalFunction fd = funcs.at(parent).derivative(i);
            vals.emplace(mu, fd.evaluate(x0));
            if (order < max_order) funcs.emplace(mu, std::move(fd));
        }
    }
    return vals;
}

Rational multi_binomial(const Exponents& nu, const Exponents& kappa) {
    Rational r(1);
    for (std::size_t i = 0; i < nu.size(); ++i) r *= Rational(binomial(nu[i], kappa[i]));
    return r;
}

// all kappa with kappa <= nu componentwise
void each_sub_index(const Exponents& nu, std::size_t pos, Exponents& cur,
                    const std::function<void(const Exponents&)>& fn) {
    if (pos == nu.size()) {
        fn(cur);
        return;
    }
    for (unsigned v = 0; v <= nu[pos]; ++v) {
        cur[pos] = v;
        each_sub_index(nu, pos + 1, cur, fn);
    }
}

} // namespace

int integral_dimension(const Metric& m, int d, int extra_orders, std::uint64_t seed) {
    const int n = m.n;
    const DeterminingSystem sys = determining_system(m, d);
    const int max_order = d + 1 + extra_orders;
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < 20; ++attempt) {
        const std::vector<Rational> x0 = sample_point(rng, n);
        try {
            // per-coefficient derivative values up to order max_order - 1
            std::vector<std::vector<std::map<Exponents, Rational>>> tables(sys.equations.size());
            for (std::size_t e = 0; e < sys.equations.size(); ++e)
                for (const auto& t : sys.equations[e])
                    tables[e].push_back(derivative_table(t.c, x0, max_order - 1));

            // jet coordinates (sigma, mu) with |mu| <= L, ordered by |mu| then grlex
            std::vector<Exponents> jet_idx; // all |mu| <= max_order, increasing order
            std::vector<std::size_t> order_start{0};
            for (int o = 0; o <= max_order; ++o) {
                for (const Exponents& mu : multi_indices(n, o)) jet_idx.push_back(mu);
                order_start.push_back(jet_idx.size());
            }
            std::map<Exponents, int> jet_pos;
            for (std::size_t i = 0; i < jet_idx.size(); ++i)
                jet_pos.emplace(jet_idx[i], static_cast<int>(i));
            const int nunk = static_cast<int>(sys.unknowns.size());
            auto col = [&](int unknown, const Exponents& mu) {
                return jet_pos.at(mu) * nunk + unknown;
            };

            // base jets of order <= d+1 determine an integral once the system
            // closes; their projected dimension is monotone in L
            const int base_cols =
                static_cast<int>(order_start[static_cast<std::size_t>(d) + 2]) * nunk;
            long prev_dim = -1;
            bool prev_injective = false;
            for (int L = d + 1; L <= max_order; ++L) {
                const int ncols = static_cast<int>(order_start[static_cast<std::size_t>(L) + 1]) * nunk;
                SparseMatrix<Rational> rel(0, ncols);
                for (int o = 0; o < L; ++o) {
                    for (const Exponents& nu : multi_indices(n, o)) {
                        for (std::size_t e = 0; e < sys.equations.size(); ++e) {
                            std::map<int, Rational> row;
                            for (std::size_t t = 0; t < sys.equations[e].size(); ++t) {
                                const auto& term = sys.equations[e][t];
                                Exponents gamma(static_cast<std::size_t>(n), 0u);
                                if (term.dvar >= 0) gamma[static_cast<std::size_t>(term.dvar)] = 1;
                                Exponents cur(nu.size(), 0u);
                                each_sub_index(nu, 0, cur, [&](const Exponents& kappa) {
                                    Exponents diff(nu.size());
                                    Exponents target(nu.size());
                                    for (std::size_t k = 0; k < nu.size(); ++k) {
                                        diff[k] = nu[k] - kappa[k];
                                        target[k] = gamma[k] + kappa[k];
                                    }
                                    const Rational cv = tables[e][t].at(diff);
                                    if (cv == 0) return;
                                    row[col(term.unknown, target)] += multi_binomial(nu, kappa) * cv;
                                });
                            }
                            std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
                            if (!row.empty()) rel.append_row(row);
                        }
                    }
                }
                const auto ker = kernel_basis(rel);
                const long dim = static_cast<long>(ker.size());
                SparseMatrix<Rational> proj(0, base_cols);
                for (const auto& v : ker) {
                    std::map<int, Rational> entries;
                    for (int c = 0; c < base_cols && c < ncols; ++c)
                        if (v[static_cast<std::size_t>(c)] != 0)
                            entries.emplace(c, v[static_cast<std::size_t>(c)]);
                    proj.append_row(entries);
                }
                const long projected = rank(proj);
                const bool injective = projected == dim;
                if (injective && prev_injective && dim == prev_dim) return static_cast<int>(dim);
                prev_dim = dim;
                prev_injective = injective;
            }
            throw NoStabilization("integral dimension did not stabilize by jet order " +
                                  std::to_string(max_order));
        } catch (const DenominatorVanishes&) {
            continue; // resample
        }
    }
    throw NonGenericPoint("could not sample a point avoiding all denominators");
}

} // namespace symgap
