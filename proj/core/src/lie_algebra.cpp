#include "symgap/lie_algebra.hpp"

namespace symgap {

void LieAlgebraPresentation::set_bracket(int i, int j, std::vector<RationalFunction> v) {
    if (i == j) throw std::invalid_argument("bracket of an element with itself");
    if (static_cast<int>(v.size()) != dim())
        throw std::invalid_argument("bracket value has wrong length");
    if (i > j) {
        for (auto& c : v) c = -c;
        std::swap(i, j);
    }
    table[{i, j}] = std::move(v);
}

std::vector<RationalFunction> LieAlgebraPresentation::bracket(int i, int j) const {
    std::vector<RationalFunction> zero(dim(), scalar(Rational(0)));
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

std::vector<RationalFunction> LieAlgebraPresentation::lie(
    const std::vector<RationalFunction>& x, const std::vector<RationalFunction>& y) const {
    int N = dim();
    std::vector<RationalFunction> out(N, scalar(Rational(0)));
    for (int i = 0; i < N; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < N; ++j) {
            if (y[j].is_zero() || i == j) continue;
            auto b = bracket(i, j);
            for (int t = 0; t < N; ++t)
                if (!b[t].is_zero()) out[t] = out[t] + x[i] * y[j] * b[t];
        }
    }
    return out;
}

std::vector<std::vector<RationalFunction>> LieAlgebraPresentation::ad(
    const std::vector<RationalFunction>& x) const {
    int N = dim();
    std::vector<std::vector<RationalFunction>> M(N, std::vector<RationalFunction>(N, scalar(Rational(0))));
    for (int j = 0; j < N; ++j) {
        std::vector<RationalFunction> ej(N, scalar(Rational(0)));
        ej[j] = scalar(Rational(1));
        auto col = lie(x, ej);
        for (int a = 0; a < N; ++a) M[a][j] = col[a];
    }
    return M;
}

LieAlgebraPresentation LieAlgebraPresentation::specialize(const std::vector<Rational>& values) const {
    if (static_cast<int>(values.size()) != nparams())
        throw std::invalid_argument("wrong number of parameter values");
    LieAlgebraPresentation out;
    out.basis = basis;
    for (const auto& [ij, v] : table) {
        std::vector<RationalFunction> w;
        for (const auto& c : v) {
            RationalFunction s = c;
            for (int p = nparams() - 1; p >= 0; --p) s = s.substitute(p, values[p]);
            // after substituting everything the value is a constant in 0 vars
            w.push_back(RationalFunction::constant(0, s.constant_value()));
        }
        out.table[ij] = std::move(w);
    }
    return out;
}

} // namespace symgap
