#include "doctest.h"

#include "symgap/symbol.hpp"

using namespace symgap;

TEST_CASE("multi-index enumeration and symmetric dimensions") {
    CHECK(multi_indices(3, 2).size() == 6);
    CHECK(symmetric_dim(3, 2) == 6);
    CHECK(symmetric_dim(4, 3) == 20);
    CHECK(multi_indices(2, 5).size() == 6);
    // distinct and all of total degree k
    auto idx = multi_indices(4, 3);
    for (const auto& e : idx) CHECK(total_degree(e) == 3);
}

TEST_CASE("full first-order symbol prolongs to the full next symmetric power") {
    auto g = gl_symbol(2); // all of T* ⊗ T, dim 4
    CHECK(g.dim() == 4);
    auto g1 = prolong(g);
    CHECK(g1.dim() == 6); // S^2 T* ⊗ T in dimension 2
    auto g2 = prolong(g1);
    CHECK(g2.dim() == 8);
    auto seq = prolongation_sequence(g, 3);
    CHECK(seq.capped);
    CHECK(!seq.terminated);
    CHECK(seq.dims() == std::vector<int>{4, 6, 8, 10});
    CHECK_THROWS_AS(dimension_bound(seq, 2), NotFiniteType);
}

TEST_CASE("skew symbols terminate immediately") {
    for (int n = 2; n <= 5; ++n) {
        auto g = so_symbol(n);
        CHECK(g.dim() == n * (n - 1) / 2);
        auto seq = prolongation_sequence(g);
        CHECK(seq.terminated);
        CHECK(seq.dims() == std::vector<int>{n * (n - 1) / 2, 0});
        CHECK(dimension_bound(seq, n) == n * (n + 1) / 2);
    }
}

TEST_CASE("conformal symbol chain") {
    // n = 3: dims 4, 3, 0 and bound 3 + 4 + 3 = 10
    auto seq3 = prolongation_sequence(co_symbol(3));
    CHECK(seq3.terminated);
    CHECK(seq3.dims() == std::vector<int>{4, 3, 0});
    CHECK(dimension_bound(seq3, 3) == 10);

    // general n >= 3: (1 + n(n-1)/2, n, 0) summing with n to (n+1)(n+2)/2
    for (int n = 3; n <= 4; ++n) {
        auto seq = prolongation_sequence(co_symbol(n));
        CHECK(seq.terminated);
        CHECK(seq.dims() == std::vector<int>{1 + n * (n - 1) / 2, n, 0});
        CHECK(dimension_bound(seq, n) == (n + 1) * (n + 2) / 2);
    }
}

TEST_CASE("traceless symbol") {
    auto g = sl_symbol(3);
    CHECK(g.dim() == 8);
    // divergence-free symbols: one trace condition per direction at each order
    CHECK(prolong(g).dim() == 3 * symmetric_dim(3, 2) - 3);
    auto seq = prolongation_sequence(g, 2);
    CHECK(seq.capped); // infinite type
}

TEST_CASE("first-order symbols of conserved-tensor equations") {
    // d = 1 reproduces the skew symbol
    for (int n = 2; n <= 4; ++n) {
        auto g = killing_symbol(n, 1);
        CHECK(g.dim() == n * (n - 1) / 2);
    }
    // closed form: n*C(n+d-1,d) - C(n+d,d+1)
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d) {
            auto g = killing_symbol(n, d);
            CHECK(g.dim() == n * binomial(n + d - 1, d) - binomial(n + d, d + 1));
        }
    CHECK(killing_symbol(3, 2).dim() == 8);
    CHECK(killing_symbol(2, 3).dim() == 3);
    CHECK(killing_symbol(2, 1).dim() == 1);
}

TEST_CASE("quadratic conserved quantities: full chain and bound") {
    // dims (n(n+1)/2 base fiber) handled by the caller; here the symbol chain
    // n(n^2-1)/3, n^2(n^2-1)/12, 0 with total (n+1)^2((n+1)^2-1)/12.
    for (int n = 2; n <= 3; ++n) {
        auto seq = prolongation_sequence(killing_symbol(n, 2));
        CHECK(seq.terminated);
        std::vector<int> want{n * (n * n - 1) / 3, n * n * (n * n - 1) / 12, 0};
        CHECK(seq.dims() == want);
        int fiber = n * (n + 1) / 2;
        int N = (n + 1) * (n + 1);
        CHECK(dimension_bound(seq, fiber) == N * (N - 1) / 12);
    }
}

TEST_CASE("linear conserved quantities chain") {
    // symbol chain n(n-1)/2, 0 on top of fiber dim n: total n(n+1)/2
    for (int n = 2; n <= 5; ++n) {
        auto seq = prolongation_sequence(killing_symbol(n, 1));
        CHECK(seq.terminated);
        CHECK(dimension_bound(seq, n) == n * (n + 1) / 2);
    }
}

TEST_CASE("given dimension sequences") {
    // affine connection symmetries: fiber n + n^2, symbol already zero at order 2
    for (int n = 2; n <= 4; ++n)
        CHECK(dimension_bound(std::vector<int>{n, n * n, 0}, 0) == n + n * n);
    // projective chain n, n^2, n, 0
    for (int n = 2; n <= 4; ++n)
        CHECK(dimension_bound(std::vector<int>{n, n * n, n, 0}, 0) == n * n + 2 * n);
}

TEST_CASE("prolongation is functorial in the obvious inclusion") {
    // the prolongation of a subspace embeds into the prolongation of a superspace
    auto sub = so_symbol(3);
    auto sup = co_symbol(3);
    auto p_sub = prolong(sub);  // 0
    auto p_sup = prolong(sup);  // 3
    CHECK(p_sub.dim() == 0);
    CHECK(p_sup.dim() == 3);
    // and prolongs of co(3) live inside prolongs of gl(3)
    auto p_gl = prolong(gl_symbol(3));
    std::vector<std::vector<Rational>> big = p_gl.basis;
    for (const auto& v : p_sup.basis) CHECK(in_span(big, v, (int)p_gl.ambient_dim()));
}
