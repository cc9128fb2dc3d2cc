#include "symgap/lie_analysis.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "symgap/matrix.hpp"
#include "symgap/symbol.hpp"

namespace symgap {

namespace {

RationalFunction rf0(const LieAlgebraPresentation& L) {
    return RationalFunction::constant(L.nparams(), Rational(0));
}

std::vector<RationalFunction> basis_vector(const LieAlgebraPresentation& L, int i) {
    std::vector<RationalFunction> v(static_cast<std::size_t>(L.dim()), rf0(L));
    v[static_cast<std::size_t>(i)] = RationalFunction::constant(L.nparams(), Rational(1));
    return v;
}

bool vec_zero(const std::vector<RationalFunction>& v) {
    return std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_zero(); });
}

Subspace full_space(const LieAlgebraPresentation& L) {
    Subspace s;
    for (int i = 0; i < L.dim(); ++i) s.push_back(basis_vector(L, i));
    return s;
}

Subspace bracket_span(const LieAlgebraPresentation& L, const Subspace& a, const Subspace& b) {
    std::vector<std::vector<RationalFunction>> vecs;
    for (const auto& x : a)
        for (const auto& y : b) {
            auto v = L.lie(x, y);
            if (!vec_zero(v)) vecs.push_back(std::move(v));
        }
    return row_space_basis(vecs, L.dim());
}

// L must be parameter-free; extract exact rational entries
Rational const_entry(const RationalFunction& f) {
    if (!f.is_constant()) throw std::invalid_argument("algebra must be parameter-free here");
    return f.constant_value();
}

using DenseK = std::vector<std::vector<RationalFunction>>;

DenseK dense_mul(const DenseK& a, const DenseK& b, const RationalFunction& zero) {
    const std::size_t n = a.size();
    DenseK r(n, std::vector<RationalFunction>(n, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) r[i][j] = r[i][j] + a[i][k] * b[k][j];
        }
    return r;
}

RationalFunction dense_trace(const DenseK& a, const RationalFunction& zero) {
    RationalFunction t = zero;
    for (std::size_t i = 0; i < a.size(); ++i) t = t + a[i][i];
    return t;
}

// characteristic polynomial of a dense matrix by the Faddeev-LeVerrier
// recursion; returns c_0..c_{n-1}, 1 (monic)
std::vector<RationalFunction> faddeev_leverrier(const DenseK& a, int np) {
    const int n = static_cast<int>(a.size());
    const RationalFunction zero = RationalFunction::constant(np, Rational(0));
    const RationalFunction one = RationalFunction::constant(np, Rational(1));
    std::vector<RationalFunction> c(static_cast<std::size_t>(n) + 1, zero);
    c[static_cast<std::size_t>(n)] = one;
    DenseK m(static_cast<std::size_t>(n), std::vector<RationalFunction>(static_cast<std::size_t>(n), zero));
    for (int k = 1; k <= n; ++k) {
        // M_k = A (M_{k-1} + c_{n-k+1} I)
        DenseK shifted = m;
        for (int i = 0; i < n; ++i)
            shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
                shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] +
                c[static_cast<std::size_t>(n - k + 1)];
        m = dense_mul(a, shifted, zero);
        c[static_cast<std::size_t>(n - k)] =
            -(dense_trace(m, zero) * RationalFunction::constant(np, Rational(1, k)));
    }
    return c;
}

// rational roots (with algebraic multiplicity) of a monic polynomial given by
// coefficients c_0..c_n over Q; remaining = degree left unfactored
std::vector<Rational> monic_rational_roots(std::vector<Rational> c, int& remaining) {
    std::vector<Rational> roots;
    auto degree = [&] { return static_cast<int>(c.size()) - 1; };
    auto deflate = [&](const Rational& r) {
        // synthetic division by (t - r)
        const int n = degree();
        std::vector<Rational> q(static_cast<std::size_t>(n));
        Rational carry = c[static_cast<std::size_t>(n)];
        for (int i = n - 1; i >= 0; --i) {
            q[static_cast<std::size_t>(i)] = carry;
            carry = c[static_cast<std::size_t>(i)] + carry * r;
        }
        c = std::move(q);
    };
    auto value_at = [&](const Rational& r) {
        Rational v(0);
        for (int i = degree(); i >= 0; --i) v = v * r + c[static_cast<std::size_t>(i)];
        return v;
    };
    while (degree() > 0) {
        if (c[0] == 0) {
            roots.emplace_back(0);
            deflate(Rational(0));
            continue;
        }
        // scale to a monic integer polynomial: roots become integers
        Integer den(1);
        for (const auto& ci : c) den = lcm(den, denominator(ci));
        // s = den * t satisfies s^n + sum c_i den^{n-i} s^i = 0
        Integer bound(1);
        {
            Integer m(0), p(1);
            for (int i = degree() - 1; i >= 0; --i) {
                p *= den;
                Integer v = abs(numerator(c[static_cast<std::size_t>(i)]) *
                                (p / denominator(c[static_cast<std::size_t>(i)])));
                if (v > m) m = v;
            }
            bound += m;
        }
        if (bound > 200000) break; // give up on the search, report remainder
        // integer roots s of the scaled polynomial divide its constant term
        Integer q0 = numerator(c[0]) * (den / denominator(c[0]));
        for (int i = 1; i < degree(); ++i) q0 *= den;
        q0 = abs(q0);
        bool found = false;
        for (Integer s = -bound; s <= bound; ++s) {
            if (s == 0 || q0 % s != 0) continue;
            const Rational r = Rational(s) / Rational(den);
            if (value_at(r) == 0) {
                roots.push_back(r);
                deflate(r);
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    remaining = degree();
    return roots;
}

} // namespace

bool jacobi_check(const LieAlgebraPresentation& L) {
    const int n = L.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const auto ei = basis_vector(L, i), ej = basis_vector(L, j), ek = basis_vector(L, k);
                auto s = L.lie(ei, L.lie(ej, ek));
                const auto t = L.lie(ej, L.lie(ek, ei));
                const auto u = L.lie(ek, L.lie(ei, ej));
                for (int a = 0; a < n; ++a) {
                    s[static_cast<std::size_t>(a)] = s[static_cast<std::size_t>(a)] +
                                                     t[static_cast<std::size_t>(a)] +
                                                     u[static_cast<std::size_t>(a)];
                }
                if (!vec_zero(s)) return false;
            }
    return true;
}

std::vector<Subspace> derived_series(const LieAlgebraPresentation& L) {
    std::vector<Subspace> series{full_space(L)};
    while (!series.back().empty()) {
        Subspace next = bracket_span(L, series.back(), series.back());
        if (next.size() == series.back().size()) {
            // perfect algebra: series is stationary and never reaches zero
            series.push_back(std::move(next));
            break;
        }
        series.push_back(std::move(next));
    }
    return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebraPresentation& L) {
    const Subspace whole = full_space(L);
    std::vector<Subspace> series{whole};
    while (!series.back().empty()) {
        Subspace next = bracket_span(L, whole, series.back());
        if (next.size() == series.back().size()) {
            series.push_back(std::move(next));
            break;
        }
        series.push_back(std::move(next));
    }
    return series;
}

Subspace center(const LieAlgebraPresentation& L) {
    const int n = L.dim();
    SparseMatrix<RationalFunction> m(n * n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto br = j < i   ? L.bracket(j, i)
                            : j > i ? L.bracket(i, j)
                                    : std::vector<RationalFunction>();
            if (br.empty()) continue;
            const Rational sign = j < i ? Rational(-1) : Rational(1);
            // row block i, x_j coefficient of [x, e_i]
            for (int r = 0; r < n; ++r)
                if (!br[static_cast<std::size_t>(r)].is_zero())
                    m.add(i * n + r, j, br[static_cast<std::size_t>(r)] * L.scalar(sign));
        }
    return kernel_basis(m);
}

std::vector<long> series_dims(const std::vector<Subspace>& s) {
    std::vector<long> out;
    out.reserve(s.size());
    for (const auto& sub : s) out.push_back(static_cast<long>(sub.size()));
    return out;
}

Grading grading_by_element(const LieAlgebraPresentation& L,
                           const std::vector<RationalFunction>& x) {
    const int n = L.dim();
    const auto admat = L.ad(x);
    // exact rational matrix required
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    DenseK ak(static_cast<std::size_t>(n),
              std::vector<RationalFunction>(static_cast<std::size_t>(n), rf0(L)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                const_entry(admat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            ak[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                admat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    const auto cp = faddeev_leverrier(ak, L.nparams());
    std::vector<Rational> coeffs;
    coeffs.reserve(cp.size());
    for (const auto& c : cp) coeffs.push_back(const_entry(c));
    int remaining = 0;
    auto roots = monic_rational_roots(coeffs, remaining);
    if (remaining > 0)
        throw NotDiagonalizable("spectrum of the grading candidate is not rational");
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    Grading g;
    int total = 0;
    for (const auto& lambda : roots) {
        SparseMatrix<RationalFunction> shifted(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (i == j) v -= lambda;
                if (v != 0) shifted.set(i, j, L.scalar(v));
            }
        auto eig = kernel_basis(shifted);
        if (eig.empty()) continue;
        total += static_cast<int>(eig.size());
        g.weights.push_back(lambda);
        g.eigenspaces.push_back(std::move(eig));
    }
    if (total != n)
        throw NotDiagonalizable("grading candidate has a nontrivial Jordan block");
    return g;
}

SpectrumInvariants ad_spectrum_invariants(const LieAlgebraPresentation& L,
                                          const std::vector<RationalFunction>& x,
                                          const Subspace& restrict_to) {
    const int n = L.dim();
    const int k = static_cast<int>(restrict_to.size());
    // columns of the frame
    SparseMatrix<RationalFunction> frame(n, k);
    for (int j = 0; j < k; ++j)
        for (int r = 0; r < n; ++r)
            if (!restrict_to[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)].is_zero())
                frame.set(r, j, restrict_to[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)]);
    const RationalFunction zero = rf0(L);
    DenseK a(static_cast<std::size_t>(k), std::vector<RationalFunction>(static_cast<std::size_t>(k), zero));
    for (int j = 0; j < k; ++j) {
        const auto img = L.lie(x, restrict_to[static_cast<std::size_t>(j)]);
        const auto coords = solve(frame, img);
        if (!coords) throw std::invalid_argument("subspace is not ad-invariant");
        for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*coords)[static_cast<std::size_t>(i)];
    }
    SpectrumInvariants inv;
    inv.char_poly = faddeev_leverrier(a, L.nparams());
    const DenseK a2 = dense_mul(a, a, zero);
    inv.trace2 = dense_trace(a2, zero);
    inv.trace4 = dense_trace(dense_mul(a2, a2, zero), zero);
    if (inv.trace2.is_zero()) throw ZeroTrace("tr(A^2) vanishes; lambda undefined");
    inv.lambda = inv.trace4 / (inv.trace2 * inv.trace2);
    const RationalFunction one = RationalFunction::constant(L.nparams(), Rational(1));
    const RationalFunction two = RationalFunction::constant(L.nparams(), Rational(2));
    inv.J = two * (one - two * inv.lambda);
    return inv;
}

bool verify_invariant_relations() {
    // invariant of the 7-dimensional algebra in the parameter m
    const LieAlgebraPresentation wm = w7();
    const RationalFunction m = RationalFunction::variable(1, 0);
    const RationalFunction one = RationalFunction::constant(1, Rational(1));
    const RationalFunction half = RationalFunction::constant(1, Rational(1, 2));
    std::vector<RationalFunction> x(7, RationalFunction::constant(1, Rational(0)));
    x[5] = one;   // W6
    x[3] = -half; // -1/2 W4
    Subspace hm1; // <W1, W2, W5, W7>
    for (int i : {0, 1, 4, 6}) {
        std::vector<RationalFunction> v(7, RationalFunction::constant(1, Rational(0)));
        v[static_cast<std::size_t>(i)] = one;
        hm1.push_back(std::move(v));
    }
    const auto inv_m = ad_spectrum_invariants(wm, x, hm1);
    const RationalFunction two = RationalFunction::constant(1, Rational(2));
    const RationalFunction num_m = one - two * m;
    const RationalFunction den_m = one - two * m + two * m * m;
    if (!(inv_m.J == (num_m * num_m) / (den_m * den_m))) return false;

    // the same invariant in terms of k = 2m - 1 is 4k^2/(k^2+1)^2
    {
        const RationalFunction km = two * m - one;
        const RationalFunction rhs =
            RationalFunction::constant(1, Rational(4)) * km * km / ((km * km + one) * (km * km + one));
        if (!(inv_m.J == rhs)) return false;
    }

    // invariant of the same algebra in the Cartan parameter I
    const LieAlgebraPresentation ci = cartan7();
    const RationalFunction I = RationalFunction::variable(1, 0);
    std::vector<RationalFunction> x5(7, RationalFunction::constant(1, Rational(0)));
    x5[4] = one; // X5 (already trace-free on the invariant subspace)
    Subspace hI; // <X2, X3, X4, Y2>
    for (int i : {1, 2, 3, 6}) {
        std::vector<RationalFunction> v(7, RationalFunction::constant(1, Rational(0)));
        v[static_cast<std::size_t>(i)] = one;
        hI.push_back(std::move(v));
    }
    const auto inv_I = ad_spectrum_invariants(ci, x5, hI);
    const RationalFunction nine25 = RationalFunction::constant(1, Rational(9, 25));
    if (!(inv_I.J == nine25 * (one + one / (I * I)))) return false;

    // I^2 as a function of k: (k^2+1)^2 / ((k^2-9)(1/9-k^2))
    const RationalFunction k = RationalFunction::variable(1, 0);
    const RationalFunction k2 = k * k;
    const RationalFunction i2den =
        (k2 - RationalFunction::constant(1, Rational(9))) *
        (RationalFunction::constant(1, Rational(1, 9)) - k2);
    const RationalFunction i2 = (k2 + one) * (k2 + one) / i2den;
    // consistency: (9/25)(1 + 1/I^2(k)) reproduces 4k^2/(k^2+1)^2
    {
        const RationalFunction lhs = nine25 * (one + one / i2);
        const RationalFunction rhs =
            RationalFunction::constant(1, Rational(4)) * k2 / ((k2 + one) * (k2 + one));
        if (!(lhs == rhs)) return false;
    }
    // symmetry under k -> -k
    {
        const RationalFunction flipped(
            i2.num().substitute(0, -Polynomial::variable(1, 0)),
            i2.den().substitute(0, -Polynomial::variable(1, 0)));
        if (!(flipped == i2)) return false;
    }
    // symmetry under k -> 1/k, checked pointwise at non-pole rational samples
    // (exact evaluation; degrees are <= 4, far fewer points would do)
    {
        int checked = 0;
        for (int t = 2; checked < 12; ++t) {
            const Rational kv(t, 7);
            if (kv == 3 || kv == Rational(1, 3)) continue;
            const Rational a = i2.evaluate({kv});
            const Rational b = i2.evaluate({Rational(1) / kv});
            if (a != b) return false;
            ++checked;
        }
    }
    // poles of I^2 sit exactly at k = ±3, ±1/3 (the maximally symmetric orbit)
    for (const Rational& p : {Rational(3), Rational(-3), Rational(1, 3), Rational(-1, 3)})
        if (i2den.evaluate({p}) != 0) return false;
    if (i2den.evaluate({Rational(2)}) == 0) return false;

    // the m = 1/2 degeneration carries a Jordan block
    const LieAlgebraPresentation wj = w7_jordan();
    std::vector<RationalFunction> xj(7, RationalFunction::constant(0, Rational(0)));
    xj[5] = RationalFunction::constant(0, Rational(1));
    xj[3] = RationalFunction::constant(0, Rational(-1, 2));
    try {
        grading_by_element(wj, xj);
        return false;
    } catch (const NotDiagonalizable&) {
    }
    return true;
}

namespace {

// ascending k-subsets of {0..n-1}
void k_subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

} // namespace

long chevalley_eilenberg(const LieAlgebraPresentation& L, int k) {
    if (L.nparams() != 0) throw std::invalid_argument("cohomology needs a parameter-free algebra");
    const int n = L.dim();
    if (k < 0 || k > n) return 0;

    // differential d_q : Lambda^q g* (x) g -> Lambda^{q+1} g* (x) g, adjoint coefficients
    auto build_d = [&](int q) {
        std::vector<std::vector<int>> dom, codom;
        k_subsets(n, q, dom);
        k_subsets(n, q + 1, codom);
        std::map<std::vector<int>, int> dom_index;
        for (std::size_t i = 0; i < dom.size(); ++i) dom_index.emplace(dom[i], static_cast<int>(i));
        SparseMatrix<Rational> d(static_cast<int>(codom.size()) * n,
                                 static_cast<int>(dom.size()) * n);
        auto add_block = [&](int trow, const std::vector<int>& s, int sign,
                             const std::vector<std::vector<Rational>>& coeff) {
            // coeff maps the value slot: entry [out][in]
            auto it = dom_index.find(s);
            if (it == dom_index.end()) return;
            const int scol = it->second;
            for (int o = 0; o < n; ++o)
                for (int in = 0; in < n; ++in)
                    if (coeff[static_cast<std::size_t>(o)][static_cast<std::size_t>(in)] != 0)
                        d.add(trow * n + o, scol * n + in,
                              Rational(sign) *
                                  coeff[static_cast<std::size_t>(o)][static_cast<std::size_t>(in)]);
        };
        // precompute ad matrices of basis elements over Q
        std::vector<std::vector<std::vector<Rational>>> adq(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto m = L.ad(basis_vector(L, i));
            adq[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(n),
                                                    std::vector<Rational>(static_cast<std::size_t>(n)));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    adq[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                        const_entry(m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        }
        std::vector<std::vector<Rational>> id(static_cast<std::size_t>(n),
                                              std::vector<Rational>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;

        for (std::size_t t = 0; t < codom.size(); ++t) {
            const std::vector<int>& T = codom[t];
            // first sum: (-1)^i [e_{T_i}, phi(T \ T_i)]
            for (std::size_t i = 0; i < T.size(); ++i) {
                std::vector<int> rest;
                for (std::size_t a = 0; a < T.size(); ++a)
                    if (a != i) rest.push_back(T[a]);
                add_block(static_cast<int>(t), rest, i % 2 == 0 ? 1 : -1,
                          adq[static_cast<std::size_t>(T[i])]);
            }
            // second sum: (-1)^{i+j} phi([e_{T_i}, e_{T_j}], T \ {T_i, T_j})
            for (std::size_t i = 0; i < T.size(); ++i)
                for (std::size_t j = i + 1; j < T.size(); ++j) {
                    const auto br = L.bracket(T[i], T[j]);
                    std::vector<int> rest;
                    for (std::size_t a = 0; a < T.size(); ++a)
                        if (a != i && a != j) rest.push_back(T[a]);
                    for (int b = 0; b < n; ++b) {
                        const Rational cb = br.empty()
                                                ? Rational(0)
                                                : const_entry(br[static_cast<std::size_t>(b)]);
                        if (cb == 0) continue;
                        if (std::find(rest.begin(), rest.end(), b) != rest.end()) continue;
                        std::vector<int> s = rest;
                        const auto pos = std::lower_bound(s.begin(), s.end(), b) - s.begin();
                        s.insert(s.begin() + pos, b);
                        int sign = ((i + j) % 2 == 0 ? 1 : -1) * (pos % 2 == 0 ? 1 : -1);
                        std::vector<std::vector<Rational>> coeff(
                            static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
                        for (int o = 0; o < n; ++o)
                            for (int in = 0; in < n; ++in)
                                coeff[static_cast<std::size_t>(o)][static_cast<std::size_t>(in)] =
                                    cb * id[static_cast<std::size_t>(o)][static_cast<std::size_t>(in)];
                        add_block(static_cast<int>(t), s, sign, coeff);
                    }
                }
        }
        return d;
    };

    const long ck = binomial(n, k) * n;
    const long rank_dk = k == n ? 0 : rank(build_d(k));
    const long rank_dkm1 = k == 0 ? 0 : rank(build_d(k - 1));
    return ck - rank_dk - rank_dkm1;
}

bool is_derivation(const LieAlgebraPresentation& L,
                   const std::vector<std::vector<RationalFunction>>& D) {
    const int n = L.dim();
    auto apply = [&](const std::vector<RationalFunction>& v) {
        std::vector<RationalFunction> out(static_cast<std::size_t>(n), rf0(L));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!D[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].is_zero())
                    out[static_cast<std::size_t>(a)] =
                        out[static_cast<std::size_t>(a)] +
                        D[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                            v[static_cast<std::size_t>(b)];
        return out;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto ei = basis_vector(L, i), ej = basis_vector(L, j);
            auto lhs = apply(L.lie(ei, ej));
            const auto r1 = L.lie(apply(ei), ej);
            const auto r2 = L.lie(ei, apply(ej));
            for (int a = 0; a < n; ++a)
                lhs[static_cast<std::size_t>(a)] = lhs[static_cast<std::size_t>(a)] -
                                                   r1[static_cast<std::size_t>(a)] -
                                                   r2[static_cast<std::size_t>(a)];
            if (!vec_zero(lhs)) return false;
        }
    return true;
}

LieAlgebraPresentation extend_by_derivation(const LieAlgebraPresentation& L,
                                            const std::vector<std::vector<RationalFunction>>& D,
                                            const std::string& name) {
    if (!is_derivation(L, D))
        throw NotADerivation("the prescribed endomorphism does not satisfy the Leibniz rule");
    const int n = L.dim();
    LieAlgebraPresentation out;
    out.basis = L.basis;
    out.basis.push_back(name);
    out.params = L.params;
    for (const auto& [key, v] : L.table) {
        auto ext = v;
        ext.push_back(rf0(L));
        out.table.emplace(key, std::move(ext));
    }
    for (int j = 0; j < n; ++j) {
        // [e_j, e_new] = -D(e_j)
        std::vector<RationalFunction> v(static_cast<std::size_t>(n) + 1, rf0(L));
        bool nz = false;
        for (int a = 0; a < n; ++a) {
            v[static_cast<std::size_t>(a)] = -D[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)];
            if (!v[static_cast<std::size_t>(a)].is_zero()) nz = true;
        }
        if (nz) out.set_bracket(j, n, std::move(v));
    }
    return out;
}

GradedNilpotentAlgebra associated_graded(const LieAlgebraPresentation& L) {
    if (L.nparams() != 0)
        throw std::invalid_argument("associated graded needs a parameter-free algebra");
    const int n = L.dim();
    const auto lcs = lower_central_series(L);
    if (lcs.back().size() != 0)
        throw std::invalid_argument("associated graded needs a nilpotent algebra");

    // adapted basis: complement of C^{i+1} inside C^i, level by level
    std::vector<std::vector<RationalFunction>> adapted;
    std::vector<int> level; // 0-based: element sits in C^level \ C^{level+1}
    GradedNilpotentAlgebra gr;
    for (std::size_t i = 0; i + 1 < lcs.size(); ++i) {
        int added = 0;
        std::vector<std::vector<RationalFunction>> span = lcs[i + 1];
        for (const auto& v : lcs[i]) {
            if (in_span(span, v, n)) continue;
            span.push_back(v);
            adapted.push_back(v);
            level.push_back(static_cast<int>(i));
            ++added;
        }
        gr.dims.push_back(added);
    }

    // coordinates of an ambient vector in the adapted basis
    SparseMatrix<RationalFunction> frame(n, n);
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r)
            if (!adapted[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)].is_zero())
                frame.set(r, j, adapted[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)]);

    // reorder adapted indices level-major (they already are, by construction)
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto br = L.lie(adapted[static_cast<std::size_t>(i)], adapted[static_cast<std::size_t>(j)]);
            const auto coords = solve(frame, br);
            if (!coords) throw std::invalid_argument("bracket left the adapted frame");
            const int target = level[static_cast<std::size_t>(i)] + level[static_cast<std::size_t>(j)] + 1;
            std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
            bool nz = false;
            for (int a = 0; a < n; ++a) {
                if (level[static_cast<std::size_t>(a)] != target) continue;
                const Rational c = const_entry((*coords)[static_cast<std::size_t>(a)]);
                if (c != 0) {
                    v[static_cast<std::size_t>(a)] = c;
                    nz = true;
                }
            }
            if (nz) gr.set_bracket(i, j, std::move(v));
        }
    validate(gr);
    return gr;
}

} // namespace symgap
