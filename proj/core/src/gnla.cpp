#include "symgap/gnla.hpp"

#include <numeric>

namespace symgap {

int GradedNilpotentAlgebra::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

int GradedNilpotentAlgebra::level_offset(int d) const {
    int off = 0;
    for (int i = 0; i < d; ++i) off += dims[i];
    return off;
}

int GradedNilpotentAlgebra::level_of(int idx) const {
    int off = 0;
    for (int d = 0; d < depth(); ++d) {
        off += dims[d];
        if (idx < off) return d + 1;
    }
    throw std::out_of_range("basis index out of range");
}

std::string GradedNilpotentAlgebra::name_of(int idx) const {
    if (idx < static_cast<int>(names.size())) return names[idx];
    return "e" + std::to_string(idx + 1);
}

void GradedNilpotentAlgebra::set_bracket(int i, int j, std::vector<Rational> v) {
    if (i == j) throw std::invalid_argument("bracket of an element with itself");
    if (static_cast<int>(v.size()) != total_dim())
        throw std::invalid_argument("bracket value has wrong length");
    if (i > j) {
        for (auto& c : v) c = -c;
        std::swap(i, j);
    }
    table[{i, j}] = std::move(v);
}

std::vector<Rational> GradedNilpotentAlgebra::bracket(int i, int j) const {
    std::vector<Rational> zero(total_dim(), Rational(0));
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

std::vector<Rational> GradedNilpotentAlgebra::lie(const std::vector<Rational>& x,
                                                  const std::vector<Rational>& y) const {
    int N = total_dim();
    std::vector<Rational> out(N, Rational(0));
    for (int i = 0; i < N; ++i) {
        if (is_zero(x[i])) continue;
        for (int j = 0; j < N; ++j) {
            if (is_zero(y[j]) || i == j) continue;
            auto b = bracket(i, j);
            for (int t = 0; t < N; ++t)
                if (!is_zero(b[t])) out[t] += x[i] * y[j] * b[t];
        }
    }
    return out;
}

void validate(const GradedNilpotentAlgebra& m) {
    const int N = m.total_dim();
    // grading: [g_{-a}, g_{-b}] lands in g_{-a-b} (zero beyond the depth)
    for (const auto& [ij, v] : m.table) {
        auto [i, j] = ij;
        int lv = m.level_of(i) + m.level_of(j);
        for (int t = 0; t < N; ++t) {
            if (is_zero(v[t])) continue;
            if (lv > m.depth() || m.level_of(t) != lv)
                throw IncompatibleFiltration("bracket [" + m.name_of(i) + "," + m.name_of(j) +
                                             "] violates the grading");
        }
    }
    // Jacobi
    std::vector<std::vector<Rational>> e(N, std::vector<Rational>(N, Rational(0)));
    for (int i = 0; i < N; ++i) e[i][i] = 1;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            for (int k = j + 1; k < N; ++k) {
                auto r = m.lie(e[i], m.bracket(j, k));
                auto s = m.lie(e[j], m.bracket(k, i));
                auto t = m.lie(e[k], m.bracket(i, j));
                for (int c = 0; c < N; ++c)
                    if (!is_zero(r[c] + s[c] + t[c]))
                        throw NotClosed(i, j, "Jacobi identity fails on (" + m.name_of(i) + "," +
                                                  m.name_of(j) + "," + m.name_of(k) + ")");
            }
    // fundamentality: [g_{-1}, g_{-d}] spans g_{-d-1}
    for (int d = 1; d < m.depth(); ++d) {
        int off = m.level_offset(d), cnt = m.dims[d];
        std::vector<std::vector<Rational>> span;
        for (int i = 0; i < m.dims[0]; ++i)
            for (int j = m.level_offset(d - 1); j < m.level_offset(d - 1) + m.dims[d - 1]; ++j) {
                auto b = m.bracket(i, j);
                std::vector<Rational> comp(b.begin() + off, b.begin() + off + cnt);
                span.push_back(std::move(comp));
            }
        if (subspace_dim(span, cnt) != cnt)
            throw NotFundamental("level -" + std::to_string(d + 1) +
                                 " is not generated by brackets with g_{-1}");
    }
}

GradedNilpotentAlgebra free_nilpotent_235() {
    GradedNilpotentAlgebra m;
    m.dims = {2, 1, 2};
    m.names = {"e1", "e2", "e3", "e4", "e5"};
    auto unit = [&](int t) {
        std::vector<Rational> v(5, Rational(0));
        v[t] = 1;
        return v;
    };
    m.set_bracket(0, 1, unit(2)); // [e1,e2] = e3
    m.set_bracket(0, 2, unit(3)); // [e1,e3] = e4
    m.set_bracket(1, 2, unit(4)); // [e2,e3] = e5
    return m;
}

GradedNilpotentAlgebra heisenberg_algebra(int dim) {
    if (dim < 3 || dim % 2 == 0) throw std::invalid_argument("heisenberg dimension must be odd >= 3");
    GradedNilpotentAlgebra m;
    m.dims = {dim - 1, 1};
    for (int i = 0; i + 1 < dim; i += 2) {
        std::vector<Rational> v(dim, Rational(0));
        v[dim - 1] = 1;
        m.set_bracket(i, i + 1, std::move(v));
    }
    return m;
}

GradedNilpotentAlgebra abelian_algebra(int n) {
    GradedNilpotentAlgebra m;
    m.dims = {n};
    return m;
}

GradedNilpotentAlgebra submax6_negative() {
    // levels: g_{-1} = <S0, Z3>, g_{-2} = <Z2>, g_{-3} = <Z1, Y0>, g_{-4} = <Z0>
    GradedNilpotentAlgebra m;
    m.dims = {2, 1, 2, 1};
    m.names = {"S0", "Z3", "Z2", "Z1", "Y0", "Z0"};
    auto unit = [&](int t, Rational c = Rational(1)) {
        std::vector<Rational> v(6, Rational(0));
        v[t] = c;
        return v;
    };
    m.set_bracket(0, 1, unit(2));              // [S0, Z3] = Z2
    m.set_bracket(0, 2, unit(3));              // [S0, Z2] = Z1
    m.set_bracket(0, 3, unit(5));              // [S0, Z1] = Z0
    m.set_bracket(2, 1, unit(4, Rational(2))); // [Z2, Z3] = 2 Y0
    return m;
}

} // namespace symgap
