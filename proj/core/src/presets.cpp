#include "symgap/lie_analysis.hpp"

namespace symgap {

namespace {

// convenience: coordinate vector c * e_i in an n-dim algebra over Q(params)
std::vector<RationalFunction> unit(int n, int np, int i, const Rational& c = Rational(1)) {
    std::vector<RationalFunction> v(static_cast<std::size_t>(n),
                                    RationalFunction::constant(np, Rational(0)));
    v[static_cast<std::size_t>(i)] = RationalFunction::constant(np, c);
    return v;
}

} // namespace

LieAlgebraPresentation sl2_presentation() {
    LieAlgebraPresentation L;
    L.basis = {"X", "Y", "H"};
    L.set_bracket(0, 1, unit(3, 0, 2));               // [X,Y] = H
    L.set_bracket(0, 2, unit(3, 0, 0, Rational(-2))); // [X,H] = -2X
    L.set_bracket(1, 2, unit(3, 0, 1, Rational(2)));  // [Y,H] = 2Y
    return L;
}

LieAlgebraPresentation heisenberg_presentation(int dim) {
    const int k = (dim - 1) / 2;
    LieAlgebraPresentation L;
    for (int i = 1; i <= k; ++i) L.basis.push_back("x" + std::to_string(i));
    for (int i = 1; i <= k; ++i) L.basis.push_back("y" + std::to_string(i));
    L.basis.push_back("z");
    for (int i = 0; i < k; ++i) L.set_bracket(i, k + i, unit(dim, 0, dim - 1));
    return L;
}

LieAlgebraPresentation cartan7() {
    LieAlgebraPresentation L;
    L.basis = {"X1", "X2", "X3", "X4", "X5", "Y1", "Y2"};
    L.params = {"I"};
    const RationalFunction I = RationalFunction::variable(1, 0);
    auto u = [&](int i, const Rational& c = Rational(1)) { return unit(7, 1, i, c); };
    L.set_bracket(0, 5, u(0, Rational(2))); // [X1,Y1] = 2X1
    L.set_bracket(1, 6, u(0));              // [X2,Y2] = X1
    L.set_bracket(2, 3, u(0));              // [X3,X4] = X1
    L.set_bracket(1, 5, u(1));              // [X2,Y1] = X2
    L.set_bracket(2, 5, u(2));              // [X3,Y1] = X3
    L.set_bracket(3, 5, u(3));              // [X4,Y1] = X4
    L.set_bracket(5, 6, u(6, Rational(-1))); // [Y1,Y2] = -Y2
    {
        auto v = u(6); // [X2,X5] = I X3 + Y2
        v[2] = I;
        L.set_bracket(1, 4, std::move(v));
    }
    {
        auto v = u(1); // [X3,X5] = X2 + (4/3) I X4
        v[3] = RationalFunction::constant(1, Rational(4, 3)) * I;
        L.set_bracket(2, 4, std::move(v));
    }
    {
        auto v = u(2); // [X4,X5] = X3 - I Y2
        v[6] = -I;
        L.set_bracket(3, 4, std::move(v));
    }
    L.set_bracket(4, 6, u(3)); // [X5,Y2] = X4
    return L;
}

LieAlgebraPresentation w7() {
    LieAlgebraPresentation L;
    L.basis = {"W1", "W2", "W3", "W4", "W5", "W6", "W7"};
    L.params = {"m"};
    const RationalFunction m = RationalFunction::variable(1, 0);
    const RationalFunction one = RationalFunction::constant(1, Rational(1));
    auto u = [&](int i, const Rational& c = Rational(1)) { return unit(7, 1, i, c); };
    // Heisenberg part: grading -1 on W1, W2, W5, W7, grading -2 on W3
    L.set_bracket(0, 4, u(2)); // [W1,W5] = W3
    {
        auto v = u(2, Rational(0)); // [W2,W7] = -(1/m) W3
        v[2] = -(one / m);
        L.set_bracket(1, 6, std::move(v));
    }
    // W4 is the grading element: ad(W4) = k id on grading-k parts
    L.set_bracket(0, 3, u(0));              // [W1,W4] = W1
    L.set_bracket(1, 3, u(1));              // [W2,W4] = W2
    L.set_bracket(2, 3, u(2, Rational(2))); // [W3,W4] = 2W3
    L.set_bracket(3, 4, u(4, Rational(-1))); // [W4,W5] = -W5
    L.set_bracket(3, 6, u(6, Rational(-1))); // [W4,W7] = -W7
    // the outer derivation W6
    {
        auto v = u(1, Rational(0)); // [W2,W6] = m W2
        v[1] = m;
        L.set_bracket(1, 5, std::move(v));
    }
    L.set_bracket(2, 5, u(2)); // [W3,W6] = W3
    L.set_bracket(4, 5, u(4)); // [W5,W6] = W5
    {
        auto v = u(6, Rational(0)); // [W6,W7] = (m-1) W7
        v[6] = m - one;
        L.set_bracket(5, 6, std::move(v));
    }
    return L;
}

LieAlgebraPresentation w7_jordan() {
    LieAlgebraPresentation L = w7().specialize({Rational(1, 2)});
    // at m = 1/2 the derivation acquires a nilpotent part: [W6,W7] gains -1/2 W2
    auto v = L.bracket(5, 6);
    v[1] = v[1] + RationalFunction::constant(0, Rational(-1, 2));
    L.set_bracket(5, 6, std::move(v));
    return L;
}

LieAlgebraPresentation submax9() {
    LieAlgebraPresentation L;
    L.basis = {"W1", "W2", "W3", "W4", "W5", "W6", "W7", "W8", "W9"};
    L.params = {"eps"};
    const RationalFunction e = RationalFunction::variable(1, 0);
    const RationalFunction e2 = e * e;
    auto u = [&](int i, const Rational& c = Rational(1)) { return unit(9, 1, i, c); };
    auto scaled = [&](int i, const RationalFunction& c) {
        auto v = u(i, Rational(0));
        v[static_cast<std::size_t>(i)] = c;
        return v;
    };
    const RationalFunction two = RationalFunction::constant(1, Rational(2));
    // Heisenberg part: grading 1 on W3, W5, W6, W7, W8, W9, grading 2 on W2
    L.set_bracket(2, 6, scaled(1, -two * e2));            // [W3,W7] = -2 eps^2 W2
    L.set_bracket(4, 5, scaled(1, two * e2));             // [W5,W6] = 2 eps^2 W2
    L.set_bracket(5, 6, u(1, Rational(2)));               // [W6,W7] = 2 W2
    L.set_bracket(7, 8, scaled(1, -two * two * e2 * e2 * e)); // [W8,W9] = -4 eps^5 W2
    // W4 is the grading element; the inner action on the level-k part is -k
    L.set_bracket(1, 3, u(1, Rational(2))); // [W2,W4] = 2W2
    L.set_bracket(2, 3, u(2));              // [W3,W4] = W3
    for (int j = 4; j <= 8; ++j) L.set_bracket(3, j, u(j, Rational(-1))); // [W4,Wj] = -Wj
    // the outer derivation W1
    L.set_bracket(0, 4, u(2)); // [W1,W5] = W3
    L.set_bracket(0, 5, u(4)); // [W1,W6] = W5
    L.set_bracket(0, 6, u(5)); // [W1,W7] = W6
    L.set_bracket(0, 7, scaled(7, -e)); // [W1,W8] = -eps W8
    L.set_bracket(0, 8, scaled(8, e));  // [W1,W9] = eps W9
    return L;
}

LieAlgebraPresentation graded11_presentation() {
    LieAlgebraPresentation L;
    L.basis = {"S0", "S1", "S2", "R", "Y0", "Z0", "Z1", "Z2", "Z3", "Z4", "Z5"};
    const int n = 11;
    auto u = [&](int i, const Rational& c = Rational(1)) { return unit(n, 0, i, c); };
    auto z = [](int i) { return 5 + i; };
    L.set_bracket(0, 1, u(0));              // [S0,S1] = S0
    L.set_bracket(0, 2, u(1, Rational(2))); // [S0,S2] = 2S1
    L.set_bracket(1, 2, u(2));              // [S1,S2] = S2
    for (int i = 0; i <= 5; ++i) {
        if (i >= 1) L.set_bracket(0, z(i), u(z(i - 1))); // [S0,Zi] = Z_{i-1}
        L.set_bracket(1, z(i), u(z(i), Rational(2 * i - 5, 2))); // [S1,Zi] = (i-5/2) Zi
        if (i <= 4)
            L.set_bracket(2, z(i), u(z(i + 1), Rational((i + 1) * (i - 5)))); // [S2,Zi]
        L.set_bracket(3, z(i), u(z(i), Rational(-1, 2))); // [R,Zi] = -1/2 Zi
    }
    L.set_bracket(z(0), z(5), u(4, Rational(2)));  // [Z0,Z5] = 2Y0
    L.set_bracket(z(1), z(4), u(4, Rational(-2))); // [Z1,Z4] = -2Y0
    L.set_bracket(z(2), z(3), u(4, Rational(2)));  // [Z2,Z3] = 2Y0
    L.set_bracket(3, 4, u(4, Rational(-1)));       // [R,Y0] = -Y0
    return L;
}

} // namespace symgap
