#pragma once

#include <map>
#include <optional>
#include <vector>

#include "symgap/rational.hpp"
#include "symgap/rational_function.hpp"

namespace symgap {

// Sparse exact matrix over a field K (Rational or RationalFunction).
// No zero entries are ever stored.
template <class K>
class SparseMatrix {
public:
    SparseMatrix(int rows = 0, int cols = 0) : rows_(rows), cols_(cols), data_(rows) {}

    static SparseMatrix identity(int n, const K& one) {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, one);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const K& v) {
        if (v == K{}) data_.at(r).erase(c);
        else data_.at(r)[c] = v;
    }
    void add(int r, int c, const K& v) {
        auto& row = data_.at(r);
        auto it = row.find(c);
        if (it == row.end()) {
            if (!(v == K{})) row.emplace(c, v);
        } else {
            it->second = it->second + v;
            if (it->second == K{}) row.erase(it);
        }
    }
    K get(int r, int c) const {
        auto it = data_.at(r).find(c);
        return it == data_.at(r).end() ? K{} : it->second;
    }
    const std::map<int, K>& row(int r) const { return data_.at(r); }
    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    void append_row(const std::map<int, K>& row) {
        data_.push_back(row);
        ++rows_;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        std::vector<K> out(rows_, K{});
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, a] : data_[r]) out[r] = out[r] + a * v.at(c);
        return out;
    }

private:
    int rows_, cols_;
    std::vector<std::map<int, K>> data_;
};

namespace detail {

// Integer sparse row utilities for the fraction-free (Bareiss-style) path over Q.
using IntRow = std::map<int, Integer>;

inline void remove_content(IntRow& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : row) g = gcd(g, v);
    if (row.begin()->second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : row) v /= g;
}

inline IntRow clear_denominators(const std::map<int, Rational>& row) {
    Integer l = 1;
    for (const auto& [c, v] : row) l = lcm(l, denominator(v));
    IntRow out;
    for (const auto& [c, v] : row) out.emplace(c, numerator(v) * (l / denominator(v)));
    remove_content(out);
    return out;
}

} // namespace detail

// Row echelon form data. `rows` holds the surviving pivot rows (exact field
// entries, content-normalized over Q), ordered by pivot column.
template <class K>
struct Echelon {
    int rank = 0;
    int cols = 0;
    std::vector<std::map<int, K>> rows;  // pivot rows
    std::vector<int> pivot_cols;
};

// Fraction-free elimination over Q: rows are kept integral, each update is
// the two-row cross-multiplication followed by content removal. Pivot choice:
// smallest leading column, then sparsest row, then lowest original index.
Echelon<Rational> echelon_form(const SparseMatrix<Rational>& m);

// Generic exact elimination over a function field.
Echelon<RationalFunction> echelon_form(const SparseMatrix<RationalFunction>& m);

template <class K>
int rank(const SparseMatrix<K>& m) {
    return echelon_form(m).rank;
}

template <class K>
K field_one() {
    return K(1);
}
template <>
inline RationalFunction field_one<RationalFunction>() {
    return RationalFunction::constant(0, Rational(1));
}

// Basis of {v : Mv = 0}; deterministic (one vector per free column, ascending).
template <class K>
std::vector<std::vector<K>> kernel_basis(const SparseMatrix<K>& m) {
    Echelon<K> e = echelon_form(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int pc : e.pivot_cols) is_pivot[pc] = true;
    std::vector<std::vector<K>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(cols, K{});
        v[f] = field_one<K>();
        // back substitution, bottom pivot row first
        for (int r = e.rank - 1; r >= 0; --r) {
            int pc = e.pivot_cols[r];
            K sum{};
            K pivval{};
            for (const auto& [c, a] : e.rows[r]) {
                if (c == pc) pivval = a;
                else sum = sum + a * v[c];
            }
            if (sum == K{}) v[pc] = K{};
            else v[pc] = -(sum / pivval);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
SparseMatrix<K> matrix_from_rows(const std::vector<std::vector<K>>& vectors, int dim) {
    SparseMatrix<K> m(static_cast<int>(vectors.size()), dim);
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (int c = 0; c < dim; ++c)
            if (!(vectors[r].at(c) == K{})) m.set(static_cast<int>(r), c, vectors[r][c]);
    return m;
}

// Echelonized basis of the span of the given vectors.
template <class K>
std::vector<std::vector<K>> row_space_basis(const std::vector<std::vector<K>>& vectors, int dim) {
    Echelon<K> e = echelon_form(matrix_from_rows(vectors, dim));
    std::vector<std::vector<K>> out;
    for (const auto& row : e.rows) {
        std::vector<K> v(dim, K{});
        for (const auto& [c, a] : row) v[c] = a;
        out.push_back(std::move(v));
    }
    return out;
}

template <class K>
int subspace_dim(const std::vector<std::vector<K>>& vectors, int dim) {
    return rank(matrix_from_rows(vectors, dim));
}

// Basis of span(A) ∩ span(B) inside K^dim.
template <class K>
std::vector<std::vector<K>> intersect_subspaces(const std::vector<std::vector<K>>& a,
                                                const std::vector<std::vector<K>>& b, int dim) {
    if (a.empty() || b.empty()) return {};
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    // columns: coefficients on A then on B; rows: ambient coordinates
    SparseMatrix<K> m(dim, na + nb);
    for (int i = 0; i < na; ++i)
        for (int r = 0; r < dim; ++r)
            if (!(a[i].at(r) == K{})) m.set(r, i, a[i][r]);
    for (int j = 0; j < nb; ++j)
        for (int r = 0; r < dim; ++r)
            if (!(b[j].at(r) == K{})) m.set(r, na + j, -b[j][r]);
    auto ker = kernel_basis(m);
    std::vector<std::vector<K>> vecs;
    for (const auto& k : ker) {
        std::vector<K> v(dim, K{});
        for (int i = 0; i < na; ++i)
            for (int r = 0; r < dim; ++r) v[r] = v[r] + k[i] * a[i][r];
        vecs.push_back(std::move(v));
    }
    return row_space_basis(vecs, dim);
}

template <class K>
bool in_span(const std::vector<std::vector<K>>& basis, const std::vector<K>& v, int dim) {
    bool vz = true;
    for (const auto& x : v)
        if (!(x == K{})) vz = false;
    if (vz) return true;
    int r0 = subspace_dim(basis, dim);
    auto with = basis;
    with.push_back(v);
    return subspace_dim(with, dim) == r0;
}

// One particular solution of Mx = b (free variables set to zero), if consistent.
template <class K>
std::optional<std::vector<K>> solve(const SparseMatrix<K>& m, const std::vector<K>& b) {
    SparseMatrix<K> aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (const auto& [c, v] : m.row(r)) aug.set(r, c, v);
        if (!(b.at(r) == K{})) aug.set(r, m.cols(), b[r]);
    }
    Echelon<K> e = echelon_form(aug);
    for (int pc : e.pivot_cols)
        if (pc == m.cols()) return std::nullopt;
    std::vector<K> x(m.cols(), K{});
    for (int r = e.rank - 1; r >= 0; --r) {
        int pc = e.pivot_cols[r];
        K sum{}, pivval{};
        for (const auto& [c, a] : e.rows[r]) {
            if (c == pc) pivval = a;
            else if (c == m.cols()) sum = sum - a; // RHS moved over
            else sum = sum + a * x[c];
        }
        if (sum == K{}) x[pc] = K{};
        else x[pc] = -(sum / pivval);
    }
    return x;
}

} // namespace symgap
