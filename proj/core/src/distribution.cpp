#include "symgap/distribution.hpp"

#include <algorithm>

#include "symgap/sampling.hpp"
#include "symgap/symbol.hpp" // multi_indices

namespace symgap {

namespace {

using RFField = std::vector<RationalFunction>; // one vector field, rational coefficients

RFField to_rational(const VectorField& v) {
    RFField out;
    for (const auto& c : v.coeff) {
        if (!c.is_rational())
            throw std::invalid_argument("operation requires rational-function coefficients");
        out.push_back(c.rational_part());
    }
    return out;
}

std::vector<RFField> rational_generators(const Distribution& d) {
    std::vector<RFField> out;
    for (const auto& g : d.generators) out.push_back(to_rational(g));
    return out;
}

RFField rf_bracket(const RFField& v, const RFField& w) {
    int n = static_cast<int>(v.size());
    RFField r;
    r.reserve(n);
    for (int j = 0; j < n; ++j) {
        RationalFunction acc;
        for (int i = 0; i < n; ++i) {
            if (!v[i].is_zero()) acc = acc + v[i] * w[j].derivative(i);
            if (!w[i].is_zero()) acc = acc - w[i] * v[j].derivative(i);
        }
        r.push_back(acc);
    }
    return r;
}

std::vector<Rational> eval_field(const RFField& f, const std::vector<Rational>& p) {
    std::vector<Rational> out;
    out.reserve(f.size());
    for (const auto& c : f) out.push_back(c.evaluate(p));
    return out;
}

// Weak derived flag as an adapted field list: fields tagged by the level at
// which they first enter, pointwise independent at the sample point.
struct AdaptedFlag {
    std::vector<RFField> fields;
    std::vector<int> levels;          // 1-based level tag per field
    std::vector<std::vector<Rational>> evals;
    std::vector<int> cum_dims;        // rank after each level
    bool saturated = false;
    std::vector<Rational> point;
};

int rank_of(const std::vector<std::vector<Rational>>& vecs, int dim) {
    return subspace_dim(vecs, dim);
}

AdaptedFlag build_flag(const Distribution& d, std::uint64_t seed) {
    auto gens = rational_generators(d);
    const int N = d.ambient;
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < 20; ++attempt) {
        auto pt = sample_point(rng, N);
        try {
            AdaptedFlag fl;
            fl.point = pt;
            // level 1
            for (const auto& g : gens) {
                auto ev = eval_field(g, pt);
                auto trial = fl.evals;
                trial.push_back(ev);
                if (rank_of(trial, N) == static_cast<int>(trial.size())) {
                    fl.fields.push_back(g);
                    fl.levels.push_back(1);
                    fl.evals.push_back(ev);
                }
            }
            if (fl.fields.empty()) throw NonGenericPoint("generators vanish at sample point");
            fl.cum_dims.push_back(static_cast<int>(fl.fields.size()));

            for (int level = 2; level <= N + 1; ++level) {
                int before = static_cast<int>(fl.fields.size());
                std::vector<std::pair<RFField, std::vector<Rational>>> found;
                for (const auto& g : gens)
                    for (int f = 0; f < before; ++f) {
                        if (fl.levels[f] != level - 1) continue;
                        auto br = rf_bracket(g, fl.fields[f]);
                        auto ev = eval_field(br, pt);
                        auto trial = fl.evals;
                        for (const auto& [fld, e] : found) trial.push_back(e);
                        trial.push_back(ev);
                        if (rank_of(trial, N) == static_cast<int>(trial.size()))
                            found.emplace_back(std::move(br), std::move(ev));
                    }
                if (found.empty()) break;
                for (auto& [fld, ev] : found) {
                    fl.fields.push_back(std::move(fld));
                    fl.levels.push_back(level);
                    fl.evals.push_back(std::move(ev));
                }
                fl.cum_dims.push_back(static_cast<int>(fl.fields.size()));
                if (fl.cum_dims.back() == N) break;
            }
            fl.saturated = fl.cum_dims.back() == N;
            return fl;
        } catch (const DenominatorVanishes&) {
            continue; // resample
        }
    }
    throw NonGenericPoint("no generic sample point found within the budget");
}

// flag dims recomputed at an independent point (for the majority vote)
std::vector<int> flag_dims_at(const AdaptedFlag& fl, int N, const std::vector<Rational>& pt) {
    std::vector<std::vector<Rational>> acc;
    std::vector<int> dims;
    int top = *std::max_element(fl.levels.begin(), fl.levels.end());
    for (int level = 1; level <= top; ++level) {
        for (size_t f = 0; f < fl.fields.size(); ++f)
            if (fl.levels[f] == level) acc.push_back(eval_field(fl.fields[f], pt));
        dims.push_back(rank_of(acc, N));
    }
    return dims;
}

} // namespace

std::vector<std::string> monge_var_names(int n) {
    std::vector<std::string> v{"x", "y", "z"};
    for (int i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
    return v;
}

MongeEquation monge_hilbert_cartan() { return monge_power(2, 2); }

MongeEquation monge_power(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("monge_power requires m, n >= 1");
    MongeEquation eq;
    eq.n = n;
    eq.F = ExpFunction(RationalFunction(Polynomial::variable(n + 3, n + 2).pow(m)));
    return eq;
}

MongeEquation monge_perturbed(int n, int j, const Rational& c) {
    if (j < 0 || j >= n) throw std::invalid_argument("perturbation order must satisfy 0 <= j < n");
    MongeEquation eq;
    eq.n = n;
    auto zn = Polynomial::variable(n + 3, n + 2);
    auto zj = Polynomial::variable(n + 3, j + 2);
    eq.F = ExpFunction(RationalFunction(zn.pow(2) + c * zj.pow(2)));
    return eq;
}

Distribution monge_distribution(const MongeEquation& eq) {
    const int n = eq.n, N = n + 3;
    Distribution d;
    d.ambient = N;
    d.var_names = monge_var_names(n);

    VectorField dx(N);
    dx.coeff[0] = ExpFunction::constant(N, 1); // d_x
    for (int i = 0; i < n; ++i) dx.coeff[2 + i] = ExpFunction::variable(N, 3 + i);
    dx.coeff[1] = eq.F;

    VectorField dzn(N);
    dzn.coeff[N - 1] = ExpFunction::constant(N, 1);

    d.generators = {dx, dzn};
    return d;
}

GrowthVector derived_flag(const Distribution& d, std::uint64_t seed,
                          const std::optional<std::vector<Rational>>& point) {
    if (point) {
        // explicit point: single evaluation, no vote
        auto fl = build_flag(d, seed);
        GrowthVector g;
        g.dims = flag_dims_at(fl, d.ambient, *point);
        g.saturated = g.dims.back() == d.ambient;
        if (!g.saturated) g.dims.push_back(g.dims.back());
        return g;
    }

    auto fl = build_flag(d, seed);
    // majority vote over 5 sample points
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::map<std::vector<int>, int> votes;
    votes[fl.cum_dims]++;
    int cast = 1;
    for (int trial = 0; cast < 5 && trial < 40; ++trial) {
        auto pt = sample_point(rng, d.ambient);
        try {
            votes[flag_dims_at(fl, d.ambient, pt)]++;
            ++cast;
        } catch (const DenominatorVanishes&) {
        }
    }
    auto best = std::max_element(votes.begin(), votes.end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; });
    GrowthVector g;
    g.dims = best->first;
    g.saturated = g.dims.back() == d.ambient;
    if (!g.saturated) g.dims.push_back(g.dims.back());
    return g;
}

GradedNilpotentAlgebra symbol_at_point(const Distribution& d, std::uint64_t seed) {
    auto fl = build_flag(d, seed);
    const int N = d.ambient;
    const int K = static_cast<int>(fl.fields.size());
    int depth = *std::max_element(fl.levels.begin(), fl.levels.end());

    GradedNilpotentAlgebra m;
    m.dims.assign(depth, 0);
    for (int lv : fl.levels) m.dims[lv - 1]++;
    // map field index -> GNLA basis index (fields are already level-ordered)
    std::vector<int> gidx(K);
    {
        int pos = 0;
        for (int lv = 1; lv <= depth; ++lv)
            for (int f = 0; f < K; ++f)
                if (fl.levels[f] == lv) gidx[f] = pos++;
    }

    // frame matrix at the sample point (all adapted fields as columns)
    SparseMatrix<Rational> frame(N, K);
    for (int f = 0; f < K; ++f)
        for (int r = 0; r < N; ++r)
            if (!is_zero(fl.evals[f][r])) frame.set(r, f, fl.evals[f][r]);

    for (int a = 0; a < K; ++a)
        for (int b = a + 1; b < K; ++b) {
            int lv = fl.levels[a] + fl.levels[b];
            if (lv > depth) continue;
            auto br = rf_bracket(fl.fields[a], fl.fields[b]);
            auto ev = eval_field(br, fl.point);
            auto sol = solve(frame, ev);
            if (!sol) throw NonGenericPoint("bracket leaves the flag span at the sample point");
            std::vector<Rational> v(m.total_dim(), Rational(0));
            bool nonzero = false;
            for (int f = 0; f < K; ++f) {
                if (fl.levels[f] != lv || is_zero((*sol)[f])) continue;
                v[gidx[f]] = (*sol)[f];
                nonzero = true;
            }
            if (nonzero) m.set_bracket(gidx[a], gidx[b], std::move(v));
        }

    validate(m);
    return m;
}

std::vector<std::vector<RationalFunction>> annihilator(const Distribution& d) {
    auto gens = rational_generators(d);
    SparseMatrix<RationalFunction> rows(static_cast<int>(gens.size()), d.ambient);
    for (size_t i = 0; i < gens.size(); ++i)
        for (int j = 0; j < d.ambient; ++j)
            if (!gens[i][j].is_zero()) rows.set(static_cast<int>(i), j, gens[i][j]);
    auto forms = kernel_basis(rows);
    // kernel entries may be constants in a 0-variable ring; align everything
    for (auto& w : forms)
        for (auto& c : w)
            if (c.nvars() != d.ambient) c = c.extended(d.ambient);
    return forms;
}

bool is_symmetry(const VectorField& v, const Distribution& d) {
    auto forms = annihilator(d);
    for (const auto& g : d.generators) {
        auto br = lie_bracket(v, g);
        for (const auto& w : forms) {
            ExpFunction acc(d.ambient);
            for (int j = 0; j < d.ambient; ++j)
                if (!w[j].is_zero() && !br.coeff[j].is_zero())
                    acc = acc + ExpFunction(w[j]) * br.coeff[j];
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

namespace {

// clear denominators of a covector/vector of rational functions
std::vector<Polynomial> cleared(const std::vector<RationalFunction>& v, int nvars) {
    Polynomial den = Polynomial::constant(nvars, Rational(1));
    for (const auto& c : v)
        if (!c.den().is_constant()) den = divide_exact(den * c.den(), poly_gcd(den, c.den()));
    std::vector<Polynomial> out;
    for (const auto& c : v) out.push_back(c.num() * divide_exact(den, c.den()));
    return out;
}

} // namespace

PolynomialSymmetries polynomial_symmetries(const Distribution& d, int degree_cap) {
    const int N = d.ambient;
    auto forms_rf = annihilator(d);
    std::vector<std::vector<Polynomial>> forms;
    for (const auto& w : forms_rf) forms.push_back(cleared(w, N));
    std::vector<std::vector<Polynomial>> gens;
    for (const auto& g : rational_generators(d)) gens.push_back(cleared(g, N));

    // unknown layout: (monomial alpha, direction j)
    std::vector<Exponents> monos;
    for (int t = 0; t <= degree_cap; ++t)
        for (auto& e : multi_indices(N, t)) monos.push_back(e);
    const int M = static_cast<int>(monos.size());
    auto col = [&](int mi, int j) { return mi * N + j; };

    std::vector<std::map<int, Rational>> rows;
    std::map<std::pair<size_t, Exponents>, int> row_of; // (condition id, monomial) -> row

    size_t cond = 0;
    for (const auto& g : gens) {
        for (const auto& w : forms) {
            for (int mi = 0; mi < M; ++mi) {
                auto xa = Polynomial::monomial(monos[mi], Rational(1));
                for (int j = 0; j < N; ++j) {
                    // contribution of the elementary field x^alpha d_j to
                    // omega([V, g]): sum_m w_m x^a d_j(g^m) - w_j sum_l g^l d_l(x^a)
                    Polynomial expr(N);
                    for (int mm = 0; mm < N; ++mm)
                        if (!w[mm].is_zero()) expr = expr + w[mm] * xa * g[mm].derivative(j);
                    if (!w[j].is_zero())
                        for (int l = 0; l < N; ++l)
                            if (!g[l].is_zero()) expr = expr - w[j] * g[l] * xa.derivative(l);
                    for (const auto& [e, c] : expr.terms()) {
                        auto key = std::make_pair(cond, e);
                        auto it = row_of.find(key);
                        if (it == row_of.end()) {
                            it = row_of.emplace(key, static_cast<int>(rows.size())).first;
                            rows.emplace_back();
                        }
                        rows[it->second][col(mi, j)] += c;
                    }
                }
            }
            ++cond;
        }
    }

    SparseMatrix<Rational> sys(static_cast<int>(rows.size()), M * N);
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r])
            if (!is_zero(v)) sys.set(static_cast<int>(r), c, v);

    PolynomialSymmetries out;
    for (const auto& k : kernel_basis(sys)) {
        VectorField v(N);
        for (int mi = 0; mi < M; ++mi)
            for (int j = 0; j < N; ++j)
                if (!is_zero(k[col(mi, j)]))
                    v.coeff[j] = v.coeff[j] + ExpFunction(RationalFunction(
                                                  Polynomial::monomial(monos[mi], k[col(mi, j)])));
        out.basis.push_back(std::move(v));
    }
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

LieAlgebraPresentation structure_constants(const std::vector<VectorField>& fields) {
    const int K = static_cast<int>(fields.size());
    if (K == 0) return {};
    const int N = fields[0].ambient;

    // coefficient slots: (direction, frequency, monomial)
    using Slot = std::tuple<int, ExpFunction::Frequency, Exponents>;
    std::map<Slot, int> slot_of;
    auto slots_of_field = [&](const VectorField& v, bool create) {
        std::map<int, Rational> entries;
        for (int j = 0; j < N; ++j)
            for (const auto& [freq, rf] : v.coeff[j].terms()) {
                if (!rf.is_polynomial())
                    throw std::invalid_argument("structure_constants requires polynomial coefficients");
                auto p = rf.num() * (Rational(1) / rf.den().constant_value());
                for (const auto& [e, c] : p.terms()) {
                    Slot s{j, freq, e};
                    auto it = slot_of.find(s);
                    if (it == slot_of.end()) {
                        if (!create) throw NotClosed(-1, -1, "bracket introduces a new coefficient slot");
                        it = slot_of.emplace(s, static_cast<int>(slot_of.size())).first;
                    }
                    entries[it->second] += c;
                }
            }
        return entries;
    };

    std::vector<std::map<int, Rational>> field_slots;
    for (const auto& f : fields) field_slots.push_back(slots_of_field(f, true));

    const int S = static_cast<int>(slot_of.size());
    SparseMatrix<Rational> A(S, K);
    for (int f = 0; f < K; ++f)
        for (const auto& [s, c] : field_slots[f])
            if (!is_zero(c)) A.set(s, f, c);

    LieAlgebraPresentation L;
    for (int i = 0; i < K; ++i) L.basis.push_back("W" + std::to_string(i + 1));

    for (int a = 0; a < K; ++a)
        for (int b = a + 1; b < K; ++b) {
            auto br = lie_bracket(fields[a], fields[b]);
            std::map<int, Rational> ent;
            try {
                ent = slots_of_field(br, false);
            } catch (const NotClosed&) {
                throw NotClosed(a, b);
            }
            std::vector<Rational> rhs(S, Rational(0));
            for (const auto& [s, c] : ent) rhs[s] = c;
            auto sol = solve(A, rhs);
            if (!sol) throw NotClosed(a, b);
            std::vector<RationalFunction> v;
            bool nonzero = false;
            for (int f = 0; f < K; ++f) {
                v.push_back(RationalFunction::constant(0, (*sol)[f]));
                if (!is_zero((*sol)[f])) nonzero = true;
            }
            if (nonzero) L.set_bracket(a, b, std::move(v));
        }
    return L;
}

std::vector<VectorField> power_symmetries(int m) {
    if (m < 2) throw std::invalid_argument("power_symmetries requires integer m >= 2");
    const int N = 5; // (x, y, z, z1, z2)
    auto cst = [&](const Rational& c) { return ExpFunction::constant(N, c); };
    auto var = [&](int i) { return ExpFunction::variable(N, i); };
    auto mono = [&](int i, int k, const Rational& c) {
        return ExpFunction(RationalFunction(Polynomial::variable(N, i).pow(k) * c));
    };

    std::vector<VectorField> W(7, VectorField(N));
    W[0].coeff[0] = cst(1); // d_x
    W[1].coeff[1] = cst(1); // d_y
    W[2].coeff[2] = cst(1); // d_z
    W[3].coeff[0] = var(0); // x d_x + y d_y + 2z d_z + z1 d_z1
    W[3].coeff[1] = var(1);
    W[3].coeff[2] = var(2) * Rational(2);
    W[3].coeff[3] = var(3);
    W[4].coeff[2] = var(0); // x d_z + d_z1
    W[4].coeff[3] = cst(1);
    W[5].coeff[1] = var(1) * Rational(m); // m y d_y + z d_z + z1 d_z1 + z2 d_z2
    W[5].coeff[2] = var(2);
    W[5].coeff[3] = var(3);
    W[5].coeff[4] = var(4);
    // z2^{m-1} d_x + (m-1)/(2m-1) z2^{2m-1} d_y + (z1 z2^{m-1} - y/m) d_z
    //   + (m-1)/m z2^m d_z1
    W[6].coeff[0] = mono(4, m - 1, Rational(1));
    W[6].coeff[1] = mono(4, 2 * m - 1, Rational(m - 1) / Rational(2 * m - 1));
    W[6].coeff[2] = var(3) * ExpFunction(RationalFunction(Polynomial::variable(N, 4).pow(m - 1))) -
                    var(1) * (Rational(1) / Rational(m));
    W[6].coeff[3] = mono(4, m, Rational(m - 1) / Rational(m));
    return W;
}

std::vector<VectorField> perturbed_symmetries(int n, const Rational& eps) {
    if (n < 2) throw std::invalid_argument("perturbed_symmetries requires n >= 2");
    const int N = n + 3; // (x, y, z, z1, ..., zn)
    auto cst = [&](const Rational& c) { return ExpFunction::constant(N, c); };
    auto var = [&](int i) { return ExpFunction::variable(N, i); };
    auto xpow = [&](int a) { // x^a / a!
        Rational f(1);
        for (int t = 2; t <= a; ++t) f *= t;
        return Polynomial::variable(N, 0).pow(a) * (Rational(1) / f);
    };
    // integral of (x^a/a!) z_top dx, iterated by parts:
    //   sum_t (-1)^t x^(a-t)/(a-t)! z_{top-1-t}
    auto antider = [&](int a, int top) {
        Polynomial q(N);
        for (int t = 0; t <= a; ++t) {
            Rational sgn = (t % 2 == 0) ? 1 : -1;
            q = q + xpow(a - t) * Polynomial::variable(N, 2 + top - 1 - t) * sgn;
        }
        return q;
    };

    // chain field for p = x^k/k!: shifts z_i by p^(i), y by the exact
    // antiderivative of 2 z_n p^(n) + 2 eps^2 z_{n-1} p^(n-1)
    auto chain = [&](int k) {
        VectorField v(N);
        for (int i = 0; i <= n && i <= k; ++i)
            v.coeff[2 + i] = ExpFunction(RationalFunction(xpow(k - i)));
        Polynomial q(N);
        if (k - n >= 0) q = q + antider(k - n, n) * Rational(2);
        if (k - n + 1 >= 0) q = q + antider(k - n + 1, n - 1) * (eps * eps * 2);
        v.coeff[1] = ExpFunction(RationalFunction(q));
        return v;
    };

    // e^{lx} (2 l^n z_{n-1} d_y + sum_i l^i d_{z_i}) for l = +-eps,
    // sign-adjusted so the n = 3 family matches the usual normalization
    auto expfield = [&](const Rational& l, const Rational& sign) {
        VectorField v(N);
        ExpFunction::Frequency freq(N, Rational(0));
        freq[0] = l;
        auto e = ExpFunction::exponential(freq);
        Rational lp(1);
        for (int i = 0; i <= n; ++i) {
            v.coeff[2 + i] = e * (lp * sign);
            lp *= l;
        }
        v.coeff[1] = e * ExpFunction::variable(N, 2 + n - 1) * (lp / l * Rational(2) * sign);
        return v;
    };

    std::vector<VectorField> W;
    W.push_back([&] { VectorField v(N); v.coeff[0] = cst(1); return v; }()); // d_x
    W.push_back([&] { VectorField v(N); v.coeff[1] = cst(1); return v; }()); // d_y
    W.push_back(chain(0));                                                   // d_z
    // scaling: 2y d_y + z d_z + sum z_i d_{z_i}
    {
        VectorField v(N);
        v.coeff[1] = var(1) * Rational(2);
        for (int i = 0; i <= n; ++i) v.coeff[2 + i] = var(2 + i);
        W.push_back(v);
    }
    for (int k = 1; k <= 2 * n - 3; ++k) W.push_back(chain(k));
    W.push_back(expfield(-eps, Rational(-1)));
    W.push_back(expfield(eps, Rational(1)));
    return W;
}

} // namespace symgap
