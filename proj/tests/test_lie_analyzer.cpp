#include "doctest.h"

#include "symgap/distribution.hpp"
#include "symgap/lie_analysis.hpp"

using namespace symgap;

namespace {

std::vector<RationalFunction> coord(int n, int np, int i, const Rational& c = Rational(1)) {
    std::vector<RationalFunction> v(static_cast<std::size_t>(n),
                                    RationalFunction::constant(np, Rational(0)));
    v[static_cast<std::size_t>(i)] = RationalFunction::constant(np, c);
    return v;
}

// relabel basis elements: perm[i] = index of old element i in the new algebra
LieAlgebraPresentation permuted(const LieAlgebraPresentation& L, const std::vector<int>& perm) {
    LieAlgebraPresentation out;
    out.basis.resize(L.basis.size());
    out.params = L.params;
    for (int i = 0; i < L.dim(); ++i)
        out.basis[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
            L.basis[static_cast<std::size_t>(i)];
    for (const auto& [key, v] : L.table) {
        int a = perm[static_cast<std::size_t>(key.first)];
        int b = perm[static_cast<std::size_t>(key.second)];
        Rational sign(1);
        if (a > b) {
            std::swap(a, b);
            sign = -1;
        }
        std::vector<RationalFunction> w(v.size(), RationalFunction::constant(L.nparams(), Rational(0)));
        for (int r = 0; r < L.dim(); ++r)
            w[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])] =
                v[static_cast<std::size_t>(r)] * RationalFunction::constant(L.nparams(), sign);
        out.set_bracket(a, b, std::move(w));
    }
    return out;
}

bool same_table(const LieAlgebraPresentation& a, const LieAlgebraPresentation& b) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) {
            const auto va = a.bracket(i, j), vb = b.bracket(i, j);
            for (int r = 0; r < a.dim(); ++r) {
                const RationalFunction xa =
                    va.empty() ? RationalFunction::constant(a.nparams(), Rational(0))
                               : va[static_cast<std::size_t>(r)];
                const RationalFunction xb =
                    vb.empty() ? RationalFunction::constant(b.nparams(), Rational(0))
                               : vb[static_cast<std::size_t>(r)];
                if (!(xa == xb)) return false;
            }
        }
    return true;
}

} // namespace

TEST_CASE("all named models satisfy the jacobi identity symbolically") {
    CHECK(jacobi_check(sl2_presentation()));
    CHECK(jacobi_check(heisenberg_presentation(5)));
    CHECK(jacobi_check(cartan7()));
    CHECK(jacobi_check(w7()));
    CHECK(jacobi_check(w7_jordan()));
    CHECK(jacobi_check(submax9()));
    CHECK(jacobi_check(graded11_presentation()));

    // deliberate violation is caught
    LieAlgebraPresentation bad = sl2_presentation();
    bad.set_bracket(1, 2, coord(3, 0, 2)); // [Y,H] = H breaks jacobi
    CHECK_FALSE(jacobi_check(bad));
}

TEST_CASE("derived and lower central series") {
    CHECK(series_dims(derived_series(w7())) == std::vector<long>{7, 5, 1, 0});
    CHECK(series_dims(derived_series(submax9())) == std::vector<long>{9, 7, 1, 0});
    CHECK(series_dims(derived_series(sl2_presentation())) == std::vector<long>{3, 3});
    CHECK(series_dims(derived_series(heisenberg_presentation(5))) == std::vector<long>{5, 1, 0});
    CHECK(series_dims(lower_central_series(heisenberg_presentation(5))) ==
          std::vector<long>{5, 1, 0});

    // the derived algebra of the 7-dim model is spanned by W1, W2, W3, W5, W7
    const auto ds = derived_series(w7());
    const int np = 1;
    for (int i : {0, 1, 2, 4, 6}) CHECK(in_span(ds[1], coord(7, np, i), 7));
    CHECK_FALSE(in_span(ds[1], coord(7, np, 3), 7));
    CHECK(in_span(ds[2], coord(7, np, 2), 7)); // second derived = <W3>

    CHECK(center(heisenberg_presentation(5)).size() == 1);
    CHECK(center(sl2_presentation()).empty());
    CHECK(center(w7()).empty());
    CHECK(center(submax9()).empty());
}

TEST_CASE("grading by an inner element") {
    const auto g9 = grading_by_element(submax9().specialize({Rational(1)}), coord(9, 0, 3));
    CHECK(g9.weights == std::vector<Rational>{Rational(-2), Rational(-1), Rational(0)});
    CHECK(g9.eigenspaces[0].size() == 1); // W2
    CHECK(g9.eigenspaces[1].size() == 6); // W3, W5, W6, W7, W8, W9
    CHECK(g9.eigenspaces[2].size() == 2); // W1, W4

    const auto g7 = grading_by_element(w7().specialize({Rational(3)}), coord(7, 0, 3));
    CHECK(g7.weights == std::vector<Rational>{Rational(-2), Rational(-1), Rational(0)});
    CHECK(g7.eigenspaces[0].size() == 1);
    CHECK(g7.eigenspaces[1].size() == 4);
    CHECK(g7.eigenspaces[2].size() == 2);

    // nilpotent ad is never a grading element
    CHECK_THROWS_AS(grading_by_element(sl2_presentation(), coord(3, 0, 0)), NotDiagonalizable);

    // the m = 1/2 degeneration: ad(W6 - 1/2 W4) has a jordan block
    std::vector<RationalFunction> x = coord(7, 0, 5);
    x[3] = RationalFunction::constant(0, Rational(-1, 2));
    CHECK_THROWS_AS(grading_by_element(w7_jordan(), x), NotDiagonalizable);
}

TEST_CASE("spectrum invariants of the 7-dim family") {
    const LieAlgebraPresentation L = w7();
    const RationalFunction m = RationalFunction::variable(1, 0);
    const RationalFunction one = RationalFunction::constant(1, Rational(1));
    std::vector<RationalFunction> x = coord(7, 1, 5);
    x[3] = RationalFunction::constant(1, Rational(-1, 2));
    Subspace h;
    for (int i : {0, 1, 4, 6}) h.push_back(coord(7, 1, i));
    const auto inv = ad_spectrum_invariants(L, x, h);

    // char poly (t^2 - 1/4)(t^2 - (1/2 - m)^2)
    const RationalFunction s = (one / RationalFunction::constant(1, Rational(2))) - m;
    const RationalFunction quarter = RationalFunction::constant(1, Rational(1, 4));
    CHECK(inv.char_poly[4] == one);
    CHECK(inv.char_poly[3].is_zero());
    CHECK(inv.char_poly[2] == -(quarter + s * s));
    CHECK(inv.char_poly[1].is_zero());
    CHECK(inv.char_poly[0] == quarter * s * s);

    // trace invariants
    CHECK(inv.trace2 == RationalFunction::constant(1, Rational(2)) * (quarter + s * s));
    const RationalFunction num = one - RationalFunction::constant(1, Rational(2)) * m;
    const RationalFunction den =
        one - RationalFunction::constant(1, Rational(2)) * m +
        RationalFunction::constant(1, Rational(2)) * m * m;
    CHECK(inv.J == num * num / (den * den));

    // nilpotent restriction has vanishing tr(A^2)
    const LieAlgebraPresentation s3 = sl2_presentation();
    Subspace all;
    for (int i = 0; i < 3; ++i) all.push_back(coord(3, 0, i));
    CHECK_THROWS_AS(ad_spectrum_invariants(s3, coord(3, 0, 0), all), ZeroTrace);
}

TEST_CASE("scalar invariant identities across the three parametrizations") {
    CHECK(verify_invariant_relations());
}

TEST_CASE("adjoint cohomology") {
    // semisimple: all cohomology vanishes
    for (int k = 0; k <= 3; ++k) CHECK(chevalley_eilenberg(sl2_presentation(), k) == 0);

    // 2-dim abelian algebra
    LieAlgebraPresentation ab2;
    ab2.basis = {"a", "b"};
    CHECK(chevalley_eilenberg(ab2, 0) == 2);
    CHECK(chevalley_eilenberg(ab2, 1) == 4);
    CHECK(chevalley_eilenberg(ab2, 2) == 2);

    // euler characteristic of the complex is zero, so it is for cohomology
    const LieAlgebraPresentation h3 = heisenberg_presentation(3);
    long chi = 0;
    for (int k = 0; k <= 3; ++k) chi += (k % 2 == 0 ? 1 : -1) * chevalley_eilenberg(h3, k);
    CHECK(chi == 0);
    CHECK(chevalley_eilenberg(h3, 0) == 1); // invariants = center
}

TEST_CASE("derivations and extensions rebuild the 7-dim model") {
    // heisenberg layer in the adapted basis W1, W2, W3, W5, W7 over Q(m)
    const RationalFunction m = RationalFunction::variable(1, 0);
    const RationalFunction one = RationalFunction::constant(1, Rational(1));
    LieAlgebraPresentation h;
    h.basis = {"W1", "W2", "W3", "W5", "W7"};
    h.params = {"m"};
    h.set_bracket(0, 3, coord(5, 1, 2)); // [W1,W5] = W3
    {
        auto v = coord(5, 1, 2, Rational(0));
        v[2] = -(one / m);
        h.set_bracket(1, 4, std::move(v)); // [W2,W7] = -(1/m) W3
    }

    // grading derivation: -1 on W1, W2, W5, W7 and -2 on W3
    auto zero5 = [&] {
        return std::vector<std::vector<RationalFunction>>(
            5, std::vector<RationalFunction>(5, RationalFunction::constant(1, Rational(0))));
    };
    auto d4 = zero5();
    for (int i : {0, 1, 3, 4}) d4[i][i] = -one;
    d4[2][2] = -(one + one);
    CHECK(is_derivation(h, d4));
    const LieAlgebraPresentation ht = extend_by_derivation(h, d4, "W4");
    CHECK(ht.dim() == 6);

    // a non-derivation is rejected
    auto bad = zero5();
    bad[0][2] = one; // W3 -> W1 alone violates leibniz
    CHECK_FALSE(is_derivation(h, bad));
    CHECK_THROWS_AS(extend_by_derivation(h, bad, "E"), NotADerivation);

    // outer derivation ad(W6) of the extended algebra
    std::vector<std::vector<RationalFunction>> d6(
        6, std::vector<RationalFunction>(6, RationalFunction::constant(1, Rational(0))));
    d6[1][1] = -m;      // W2 -> -m W2
    d6[2][2] = -one;    // W3 -> -W3
    d6[3][3] = -one;    // W5 -> -W5
    d6[4][4] = m - one; // W7 -> (m-1) W7
    CHECK(is_derivation(ht, d6));
    const LieAlgebraPresentation g = extend_by_derivation(ht, d6, "W6");

    // basis is W1, W2, W3, W5, W7, W4, W6; reorder to the model's W1..W7
    const LieAlgebraPresentation rebuilt = permuted(g, {0, 1, 2, 4, 6, 3, 5});
    CHECK(same_table(rebuilt, w7()));

    // and the model at m = 3 matches the vector-field realization
    const LieAlgebraPresentation fields = structure_constants(power_symmetries(3));
    CHECK(same_table(w7().specialize({Rational(3)}), fields));
}

TEST_CASE("derivations and extensions rebuild the 9-dim model") {
    const RationalFunction e = RationalFunction::variable(1, 0);
    const RationalFunction one = RationalFunction::constant(1, Rational(1));
    const RationalFunction two = one + one;
    // heisenberg layer in the basis W2, W3, W5, W6, W7, W8, W9 over Q(eps)
    LieAlgebraPresentation h;
    h.basis = {"W2", "W3", "W5", "W6", "W7", "W8", "W9"};
    h.params = {"eps"};
    auto central = [&](const RationalFunction& c) {
        std::vector<RationalFunction> v(7, RationalFunction::constant(1, Rational(0)));
        v[0] = c;
        return v;
    };
    h.set_bracket(1, 4, central(-two * e * e)); // [W3,W7]
    h.set_bracket(2, 3, central(two * e * e));  // [W5,W6]
    h.set_bracket(3, 4, central(two));          // [W6,W7]
    h.set_bracket(5, 6, central(-two * two * e * e * e * e * e)); // [W8,W9]
    CHECK(jacobi_check(h));

    auto zero = [&](int n) {
        return std::vector<std::vector<RationalFunction>>(
            n, std::vector<RationalFunction>(n, RationalFunction::constant(1, Rational(0))));
    };
    // grading: -2 on the center, -1 on the rest
    auto d4 = zero(7);
    d4[0][0] = -two;
    for (int i = 1; i < 7; ++i) d4[i][i] = -one;
    CHECK(is_derivation(h, d4));
    const LieAlgebraPresentation ht = extend_by_derivation(h, d4, "W4");

    // the second derivation from the degree-0 endomorphism
    auto d1 = zero(8);
    d1[1][2] = one;  // W5 -> W3
    d1[2][3] = one;  // W6 -> W5
    d1[3][4] = one;  // W7 -> W6
    d1[5][5] = -e;   // W8 -> -eps W8
    d1[6][6] = e;    // W9 -> eps W9
    CHECK(is_derivation(ht, d1));
    const LieAlgebraPresentation g = extend_by_derivation(ht, d1, "W1");

    // basis is W2, W3, W5, W6, W7, W8, W9, W4, W1; reorder to W1..W9
    const LieAlgebraPresentation rebuilt = permuted(g, {1, 2, 4, 5, 6, 7, 8, 3, 0});
    CHECK(same_table(rebuilt, submax9()));

    // and the model at eps = 1 matches the vector-field realization
    const LieAlgebraPresentation fields = structure_constants(perturbed_symmetries(3, Rational(1)));
    CHECK(same_table(submax9().specialize({Rational(1)}), fields));
}

TEST_CASE("associated graded algebra") {
    const auto gr_h = associated_graded(heisenberg_presentation(5));
    CHECK(gr_h.dims == std::vector<int>{4, 1});

    // filiform example e1..e4 with [e1,e2] = e3, [e1,e3] = e4
    LieAlgebraPresentation f;
    f.basis = {"e1", "e2", "e3", "e4"};
    f.set_bracket(0, 1, coord(4, 0, 2));
    f.set_bracket(0, 2, coord(4, 0, 3));
    const auto gr_f = associated_graded(f);
    CHECK(gr_f.dims == std::vector<int>{2, 1, 1});
    CHECK(series_dims(lower_central_series(f)) == std::vector<long>{4, 2, 1, 0});

    // non-nilpotent input is rejected
    CHECK_THROWS_AS(associated_graded(sl2_presentation()), std::invalid_argument);
}
