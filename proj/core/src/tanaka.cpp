#include "symgap/tanaka.hpp"

namespace symgap {

namespace {

// Shared state of a prolongation run: the base algebra plus the components
// computed so far, with the bracket action of every known homogeneous piece
// on the basis of m.
struct Prolonger {
    const GradedNilpotentAlgebra& m;
    std::vector<std::vector<GradedMap>>& nonneg;
    int N;
    std::vector<int> lev; // 1-based depth of each basis element of m

    Prolonger(const GradedNilpotentAlgebra& m_, std::vector<std::vector<GradedMap>>& nn)
        : m(m_), nonneg(nn), N(m_.total_dim()) {
        for (int i = 0; i < N; ++i) lev.push_back(m.level_of(i));
    }

    // dim of the degree-d homogeneous component of m + computed part
    int tdim(int d) const {
        if (d < 0) return (-d <= m.depth()) ? m.dims[-d - 1] : 0;
        if (d < static_cast<int>(nonneg.size())) return static_cast<int>(nonneg[d].size());
        return 0;
    }

    // [w, e_b] for w the p-th basis element of the degree-d component,
    // in the coordinates of the degree-(d - lev[b]) component.
    std::vector<Rational> act(int d, int p, int b) const {
        int target = d - lev[b];
        std::vector<Rational> out(tdim(target), Rational(0));
        if (out.empty()) return out;
        if (d < 0) {
            auto br = m.bracket(m.level_offset(-d - 1) + p, b);
            int off = m.level_offset(-target - 1);
            for (size_t t = 0; t < out.size(); ++t) out[t] = br[off + t];
        } else {
            const auto& img = nonneg[d][p].img[b];
            for (size_t t = 0; t < img.size(); ++t) out[t] = img[t];
        }
        return out;
    }

    // Basis of the degree-k component: kernel of the derivation conditions.
    std::vector<GradedMap> component(int k) const {
        std::vector<int> off_u(N), blk(N);
        int U = 0;
        for (int j = 0; j < N; ++j) {
            off_u[j] = U;
            blk[j] = tdim(k - lev[j]);
            U += blk[j];
        }

        std::vector<std::map<int, Rational>> rows;
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b) {
                int td = tdim(k - lev[a] - lev[b]);
                if (td == 0) continue;
                size_t base = rows.size();
                rows.resize(base + td);
                auto br = m.bracket(a, b);
                for (int t = 0; t < N; ++t)
                    if (!is_zero(br[t]))
                        for (int r = 0; r < td; ++r) rows[base + r][off_u[t] + r] += br[t];
                for (int p = 0; p < blk[a]; ++p) {
                    auto v = act(k - lev[a], p, b);
                    for (int r = 0; r < td; ++r)
                        if (!is_zero(v[r])) rows[base + r][off_u[a] + p] -= v[r];
                }
                for (int p = 0; p < blk[b]; ++p) {
                    auto v = act(k - lev[b], p, a);
                    for (int r = 0; r < td; ++r)
                        if (!is_zero(v[r])) rows[base + r][off_u[b] + p] += v[r];
                }
            }

        SparseMatrix<Rational> con(static_cast<int>(rows.size()), U);
        for (size_t r = 0; r < rows.size(); ++r)
            for (const auto& [c, v] : rows[r])
                if (!is_zero(v)) con.set(static_cast<int>(r), c, v);

        std::vector<GradedMap> out;
        for (const auto& ker : kernel_basis(con)) {
            GradedMap u{k, std::vector<std::vector<Rational>>(N)};
            for (int j = 0; j < N; ++j)
                u.img[j] = std::vector<Rational>(ker.begin() + off_u[j],
                                                 ker.begin() + off_u[j] + blk[j]);
            out.push_back(std::move(u));
        }
        return out;
    }

    // Residual of the derivation identity for one stored element.
    bool is_derivation(const GradedMap& u) const {
        int k = u.degree;
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b) {
                int td = tdim(k - lev[a] - lev[b]);
                if (td == 0) continue;
                std::vector<Rational> res(td, Rational(0));
                auto br = m.bracket(a, b);
                for (int t = 0; t < N; ++t)
                    if (!is_zero(br[t]))
                        for (int r = 0; r < td; ++r) res[r] += br[t] * u.img[t][r];
                for (size_t p = 0; p < u.img[a].size(); ++p) {
                    if (is_zero(u.img[a][p])) continue;
                    auto v = act(k - lev[a], static_cast<int>(p), b);
                    for (int r = 0; r < td; ++r) res[r] -= u.img[a][p] * v[r];
                }
                for (size_t p = 0; p < u.img[b].size(); ++p) {
                    if (is_zero(u.img[b][p])) continue;
                    auto v = act(k - lev[b], static_cast<int>(p), a);
                    for (int r = 0; r < td; ++r) res[r] += u.img[b][p] * v[r];
                }
                for (const auto& x : res)
                    if (!is_zero(x)) return false;
            }
        return true;
    }
};

GradedMap endo_to_map(const GradedNilpotentAlgebra& m, const Endomorphism& E) {
    int N = m.total_dim();
    GradedMap u{0, std::vector<std::vector<Rational>>(N)};
    for (int j = 0; j < N; ++j) {
        int d = m.level_of(j);
        int off = m.level_offset(d - 1), cnt = m.dims[d - 1];
        u.img[j].assign(cnt, Rational(0));
        for (int a = 0; a < N; ++a) {
            if (is_zero(E[a][j])) continue;
            if (a < off || a >= off + cnt)
                throw PrescribedG0NotDerivations("prescribed endomorphism does not preserve the grading");
            u.img[j][a - off] = E[a][j];
        }
    }
    return u;
}

} // namespace

TanakaAlgebra tanaka_prolongation(const GradedNilpotentAlgebra& m,
                                  const std::optional<std::vector<Endomorphism>>& g0, int cap) {
    validate(m);
    TanakaAlgebra t;
    t.m = m;
    Prolonger pr(t.m, t.nonneg);

    for (int k = 0; k <= cap; ++k) {
        std::vector<GradedMap> comp;
        if (k == 0 && g0) {
            for (const auto& E : *g0) comp.push_back(endo_to_map(t.m, E));
            for (const auto& u : comp)
                if (!pr.is_derivation(u))
                    throw PrescribedG0NotDerivations("prescribed element violates the derivation identity");
        } else {
            comp = pr.component(k);
        }
        if (comp.empty()) {
            t.terminated = true;
            return t;
        }
        t.nonneg.push_back(std::move(comp));
    }
    t.capped = true;
    return t;
}

int dimension_certificate(const TanakaAlgebra& t) {
    if (!t.terminated)
        throw NotFiniteType("prolongation did not terminate within the cap");
    return t.total_dim();
}

bool derivation_residuals_vanish(const TanakaAlgebra& t) {
    auto& nn = const_cast<std::vector<std::vector<GradedMap>>&>(t.nonneg);
    Prolonger pr(t.m, nn);
    for (const auto& lvl : t.nonneg)
        for (const auto& u : lvl)
            if (!pr.is_derivation(u)) return false;
    return true;
}

std::vector<Rational> AssembledAlgebra::bracket(int i, int j) const {
    std::vector<Rational> zero(dim, Rational(0));
    if (i == j) return zero;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = table.find({i, j});
    if (it == table.end()) return zero;
    auto v = it->second;
    if (flip)
        for (auto& c : v) c = -c;
    return v;
}

AssembledAlgebra assemble(const TanakaAlgebra& t) {
    if (!t.terminated) throw NotFiniteType("cannot assemble a capped prolongation");
    const auto& m = t.m;
    const int N = m.total_dim();
    const int top = static_cast<int>(t.nonneg.size()) - 1;

    AssembledAlgebra a;
    std::vector<int> nn_off(top + 1, 0);
    for (int i = 0; i < N; ++i) a.degrees.push_back(-m.level_of(i));
    for (int k = 0; k <= top; ++k) {
        nn_off[k] = static_cast<int>(a.degrees.size());
        for (size_t p = 0; p < t.nonneg[k].size(); ++p) a.degrees.push_back(k);
    }
    a.dim = static_cast<int>(a.degrees.size());

    // embed coordinates of a degree-d component into the global basis
    auto to_global = [&](int d, const std::vector<Rational>& v) {
        std::vector<Rational> out(a.dim, Rational(0));
        int off = d < 0 ? m.level_offset(-d - 1) : nn_off[d];
        for (size_t i = 0; i < v.size(); ++i) out[off + i] = v[i];
        return out;
    };
    auto component_of = [&](int d, const std::vector<Rational>& global) {
        int off = d < 0 ? m.level_offset(-d - 1) : nn_off[d];
        int cnt = d < 0 ? m.dims[-d - 1] : static_cast<int>(t.nonneg[d].size());
        return std::vector<Rational>(global.begin() + off, global.begin() + off + cnt);
    };

    // brackets inside m
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            auto b = m.bracket(i, j);
            std::vector<Rational> g(a.dim, Rational(0));
            for (int c = 0; c < N; ++c) g[c] = b[c];
            a.table[{i, j}] = std::move(g);
        }

    auto dim_comp = [&](int d) -> int {
        if (d < 0) return (-d <= m.depth()) ? m.dims[-d - 1] : 0;
        return d <= top ? static_cast<int>(t.nonneg[d].size()) : 0;
    };

    // [g_k, m] from the stored component maps
    for (int k = 0; k <= top; ++k)
        for (size_t p = 0; p < t.nonneg[k].size(); ++p)
            for (int b = 0; b < N; ++b) {
                int d = k - m.level_of(b);
                std::vector<Rational> g =
                    dim_comp(d) == 0 ? std::vector<Rational>(a.dim, Rational(0))
                                     : to_global(d, t.nonneg[k][p].img[b]);
                int gi = nn_off[k] + static_cast<int>(p);
                if (b < gi) {
                    for (auto& c : g) c = -c;
                    a.table[{b, gi}] = std::move(g);
                } else {
                    a.table[{gi, b}] = std::move(g);
                }
            }

    // bracket of a global vector (supported on one component of degree d)
    // with the basis element gj, using entries already in the table
    auto br_vec = [&](int d, const std::vector<Rational>& v, int gj) {
        std::vector<Rational> out(a.dim, Rational(0));
        int off = d < 0 ? m.level_offset(-d - 1) : nn_off[d];
        for (size_t s = 0; s < v.size(); ++s) {
            if (is_zero(v[s])) continue;
            auto b = a.bracket(off + static_cast<int>(s), gj);
            for (int c = 0; c < a.dim; ++c)
                if (!is_zero(b[c])) out[c] += v[s] * b[c];
        }
        return out;
    };

    // [g_p, g_q] by increasing p+q, via the defining identity on m
    for (int r = 0; r <= 2 * top; ++r)
        for (int p = 0; p <= top; ++p) {
            int q = r - p;
            if (q < p || q > top) continue;
            for (size_t up = 0; up < t.nonneg[p].size(); ++up)
                for (size_t vq = 0; vq < t.nonneg[q].size(); ++vq) {
                    int gi = nn_off[p] + static_cast<int>(up);
                    int gj = nn_off[q] + static_cast<int>(vq);
                    if (gj <= gi) continue;
                    // action of w = [u,v] on each basis element of m:
                    // [w, X] = [[u,X], v] + [u, [v,X]]
                    std::vector<std::vector<Rational>> action(N);
                    for (int b = 0; b < N; ++b) {
                        int lb = m.level_of(b);
                        auto t1 = br_vec(p - lb, t.nonneg[p][up].img[b], gj);
                        auto t2 = br_vec(q - lb, t.nonneg[q][vq].img[b], gi);
                        int dt = r - lb;
                        std::vector<Rational> res(dim_comp(dt), Rational(0));
                        if (!res.empty()) {
                            auto c1 = component_of(dt, t1);
                            auto c2 = component_of(dt, t2);
                            for (size_t c = 0; c < res.size(); ++c) res[c] = c1[c] - c2[c];
                        } else {
                            for (int c = 0; c < a.dim; ++c)
                                if (!is_zero(t1[c] - t2[c]))
                                    throw NotClosed(gi, gj, "assembled bracket escapes the algebra");
                        }
                        action[b] = std::move(res);
                    }
                    std::vector<Rational> w(a.dim, Rational(0));
                    if (dim_comp(r) > 0) {
                        // solve for coordinates of w in the g_r basis
                        int nr = dim_comp(r);
                        int total_rows = 0;
                        for (int b = 0; b < N; ++b) total_rows += static_cast<int>(action[b].size());
                        SparseMatrix<Rational> A(total_rows, nr);
                        std::vector<Rational> rhs(total_rows, Rational(0));
                        int row = 0;
                        for (int b = 0; b < N; ++b) {
                            int dt = r - m.level_of(b);
                            for (size_t c = 0; c < action[b].size(); ++c) {
                                for (int s = 0; s < nr; ++s) {
                                    const auto& img = t.nonneg[r][s].img[b];
                                    if (!is_zero(img[c])) A.set(row, s, img[c]);
                                }
                                rhs[row] = action[b][c];
                                ++row;
                            }
                            (void)dt;
                        }
                        auto sol = solve(A, rhs);
                        if (!sol) throw NotClosed(gi, gj, "assembled bracket escapes the algebra");
                        w = to_global(r, *sol);
                    } else {
                        for (int b = 0; b < N; ++b)
                            for (const auto& c : action[b])
                                if (!is_zero(c))
                                    throw NotClosed(gi, gj, "assembled bracket escapes the algebra");
                    }
                    a.table[{gi, gj}] = std::move(w);
                }
        }

    return a;
}

bool jacobi_holds(const AssembledAlgebra& a) {
    int D = a.dim;
    auto lie = [&](const std::vector<Rational>& x, int j) {
        std::vector<Rational> out(D, Rational(0));
        for (int i = 0; i < D; ++i) {
            if (is_zero(x[i])) continue;
            auto b = a.bracket(i, j);
            for (int c = 0; c < D; ++c)
                if (!is_zero(b[c])) out[c] += x[i] * b[c];
        }
        return out;
    };
    for (int i = 0; i < D; ++i)
        for (int j = i + 1; j < D; ++j)
            for (int k = j + 1; k < D; ++k) {
                auto r = lie(a.bracket(j, k), i);
                auto s = lie(a.bracket(k, i), j);
                auto t = lie(a.bracket(i, j), k);
                for (int c = 0; c < D; ++c)
                    if (!is_zero(-r[c] - s[c] - t[c])) return false;
            }
    return true;
}

bool restriction_injective(const TanakaAlgebra& t, int k) {
    if (k < 0 || k >= static_cast<int>(t.nonneg.size())) return true;
    const auto& lvl = t.nonneg[k];
    if (lvl.empty()) return true;
    int n1 = t.m.dims[0];
    std::vector<std::vector<Rational>> rows;
    for (const auto& u : lvl) {
        std::vector<Rational> flat;
        for (int j = 0; j < n1; ++j) flat.insert(flat.end(), u.img[j].begin(), u.img[j].end());
        rows.push_back(std::move(flat));
    }
    int width = static_cast<int>(rows[0].size());
    return subspace_dim(rows, width) == static_cast<int>(lvl.size());
}

} // namespace symgap
