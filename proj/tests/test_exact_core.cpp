#include "doctest.h"

#include <random>

#include "symgap/errors.hpp"
#include "symgap/exp_function.hpp"
#include "symgap/matrix.hpp"
#include "symgap/parser.hpp"

using namespace symgap;

namespace {
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> X1 = {"x1"};

Polynomial P(const std::string& s, const std::vector<std::string>& v) {
    return parse_polynomial(s, v);
}
RationalFunction RF(const std::string& s, const std::vector<std::string>& v) {
    return parse_rational_function(s, v);
}
} // namespace

TEST_CASE("rational basics") {
    CHECK(parse_rational("1/3") == Rational(1, 3));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("polynomial arithmetic and derivative") {
    Polynomial p = P("x^2*y", XY);
    CHECK(p.derivative(0) == P("2*x*y", XY));
    CHECK(P("x1^2*x2 - 3/2", {"x1", "x2"}).term_count() == 2);

    // grlex canonical ordering: leading term of x^2 + y^3 is y^3
    Polynomial q = P("x^2 + y^3", XY);
    CHECK(q.leading_term().first == Exponents{0, 3});
}

TEST_CASE("rational function derivative and evaluation") {
    RationalFunction f = RF("1/x1", X1);
    CHECK(f.derivative(0) == RF("-1/x1^2", X1));
    RationalFunction g = RF("(x1^2+1)/x1", X1);
    CHECK(g.evaluate({Rational(2)}) == Rational(5, 2));
    CHECK_THROWS_AS(f.evaluate({Rational(0)}), DenominatorVanishes);
}

TEST_CASE("rotational conformal factor evaluation") {
    std::vector<std::string> v = {"x2", "x3"};
    RationalFunction f = RF("(1 + x2^2 + x3^2)^2", v);
    CHECK(f.evaluate({Rational(1), Rational(1)}) == Rational(9));
}

TEST_CASE("gcd reduction") {
    std::vector<std::string> v = {"x", "y"};
    // (x^2-y^2)/(x-y) reduces to x+y
    RationalFunction f(P("x^2 - y^2", v), P("x - y", v));
    CHECK(f.is_polynomial());
    CHECK(f.num() == P("x + y", v));

    Polynomial g = poly_gcd(P("x^2*y + x*y^2", v), P("x*y", v));
    CHECK(g == P("x*y", v));
}

TEST_CASE("exp function differentiation") {
    std::vector<std::string> v = {"x"};
    ExpFunction f = parse_expression("exp(-x)*x", v);
    ExpFunction expected = parse_expression("exp(-x)*(1-x)", v);
    CHECK(f.derivative(0) == expected);
}

TEST_CASE("exp identity testing is per-frequency") {
    std::vector<std::string> v = {"x"};
    ExpFunction f = parse_expression("exp(x) - exp(2*x)", v);
    CHECK(!f.is_zero());
    ExpFunction g = parse_expression("exp(x)*exp(x) - exp(2*x)", v);
    CHECK(g.is_zero());
}

TEST_CASE("parser handles parameters in exponentials") {
    std::vector<std::string> v = {"x", "z2"};
    std::map<std::string, Rational> params = {{"e", Rational(1)}};
    ExpFunction f = parse_expression("exp(-e*x)*z2", v, params);
    CHECK(f.terms().size() == 1);
    CHECK(f.terms().begin()->first == ExpFunction::Frequency{Rational(-1), Rational(0)});
}

TEST_CASE("mixed partials commute") {
    std::vector<std::string> v = {"x", "y"};
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-5, 5), expo(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial num(2), den(2);
        for (int t = 0; t < 4; ++t) {
            num.add_term({unsigned(expo(rng)), unsigned(expo(rng))}, Rational(coef(rng)));
            den.add_term({unsigned(expo(rng)), unsigned(expo(rng))}, Rational(coef(rng)));
        }
        if (den.is_zero()) continue;
        RationalFunction f(num, den);
        CHECK(f.derivative(0).derivative(1) == f.derivative(1).derivative(0));
    }
}

TEST_CASE("kernel and rank basics") {
    SparseMatrix<Rational> id3 = SparseMatrix<Rational>::identity(3, Rational(1));
    CHECK(kernel_basis(id3).empty());
    CHECK(rank(id3) == 3);

    SparseMatrix<Rational> z(2, 3);
    CHECK(kernel_basis(z).size() == 3);

    SparseMatrix<Rational> m(2, 3);
    m.set(0, 0, Rational(1));
    m.set(0, 1, Rational(1));
    m.set(1, 1, Rational(1));
    m.set(1, 2, Rational(1));
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    // proportional to (1,-1,1)
    CHECK(ker[0][0] == -ker[0][1]);
    CHECK(ker[0][2] == -ker[0][1]);
    for (const auto& v : ker)
        for (const auto& r : m.apply(v)) CHECK(r == Rational(0));
}

TEST_CASE("rank-1 outer product") {
    SparseMatrix<Rational> m(3, 4);
    std::vector<Rational> u = {Rational(2), Rational(-1), Rational(3)};
    std::vector<Rational> v = {Rational(1), Rational(0), Rational(5), Rational(-2)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j)
            if (!is_zero(u[i] * v[j])) m.set(i, j, u[i] * v[j]);
    CHECK(rank(m) == 1);
}

TEST_CASE("rank + kernel dim = cols (random matrices)") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> val(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
        int r = 1 + int(rng() % 6), c = 1 + int(rng() % 6);
        SparseMatrix<Rational> m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                int x = val(rng);
                if (x && (rng() % 2)) m.set(i, j, Rational(x));
            }
        auto ker = kernel_basis(m);
        CHECK(rank(m) + int(ker.size()) == c);
        for (const auto& v : ker)
            for (const auto& x : m.apply(v)) CHECK(x == Rational(0));
    }
}

TEST_CASE("rank cross-checked against minor-expansion determinant oracle") {
    // independent oracle: rank = largest k with a nonsingular k x k minor,
    // determinants by Laplace expansion
    auto det = [](auto&& self, const std::vector<std::vector<Rational>>& a) -> Rational {
        std::size_t n = a.size();
        if (n == 1) return a[0][0];
        Rational d(0);
        for (std::size_t j = 0; j < n; ++j) {
            if (is_zero(a[0][j])) continue;
            std::vector<std::vector<Rational>> sub;
            for (std::size_t i = 1; i < n; ++i) {
                std::vector<Rational> row;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != j) row.push_back(a[i][k]);
                sub.push_back(row);
            }
            Rational term = a[0][j] * self(self, sub);
            d += (j % 2 == 0) ? term : -term;
        }
        return d;
    };
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 5;
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        SparseMatrix<Rational> m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a[i][j] = Rational(val(rng));
                if (!is_zero(a[i][j])) m.set(i, j, a[i][j]);
            }
        int oracle_rank = 0;
        for (int k = n; k >= 1 && oracle_rank == 0; --k) {
            // enumerate all k x k minors via bitmasks (n = 5 is tiny)
            for (int rm = 0; rm < (1 << n) && oracle_rank == 0; ++rm) {
                if (__builtin_popcount(rm) != k) continue;
                for (int cm = 0; cm < (1 << n) && oracle_rank == 0; ++cm) {
                    if (__builtin_popcount(cm) != k) continue;
                    std::vector<std::vector<Rational>> sub;
                    for (int i = 0; i < n; ++i) {
                        if (!(rm >> i & 1)) continue;
                        std::vector<Rational> row;
                        for (int j = 0; j < n; ++j)
                            if (cm >> j & 1) row.push_back(a[i][j]);
                        sub.push_back(row);
                    }
                    if (!is_zero(det(det, sub))) oracle_rank = k;
                }
            }
        }
        CHECK(rank(m) == oracle_rank);
    }
}

TEST_CASE("subspace intersection") {
    using V = std::vector<Rational>;
    std::vector<V> a = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    auto self = intersect_subspaces(a, a, 2);
    CHECK(self.size() == 2);

    std::vector<V> l1 = {{Rational(1), Rational(0)}};
    std::vector<V> l2 = {{Rational(0), Rational(1)}};
    CHECK(intersect_subspaces(l1, l2, 2).empty());

    // two generic planes in Q^3 meet in a line
    std::vector<V> p1 = {{Rational(1), Rational(0), Rational(0)},
                         {Rational(0), Rational(1), Rational(0)}};
    std::vector<V> p2 = {{Rational(1), Rational(1), Rational(1)},
                         {Rational(0), Rational(1), Rational(2)}};
    auto line = intersect_subspaces(p1, p2, 3);
    CHECK(line.size() == 1);
    std::vector<V> both = {p1[0], p1[1], p2[0], p2[1]};
    CHECK(int(p1.size() + p2.size()) - subspace_dim(both, 3) == 1);
}

TEST_CASE("echelon over the function field") {
    std::vector<std::string> v = {"t"};
    SparseMatrix<RationalFunction> m(2, 2);
    m.set(0, 0, RF("t", v));
    m.set(0, 1, RF("t^2", v));
    m.set(1, 0, RF("1", v));
    m.set(1, 1, RF("t", v));
    CHECK(rank(m) == 1);
    CHECK(kernel_basis(m).size() == 1);
}

TEST_CASE("serialization round trip") {
    std::vector<std::string> v = {"x", "y"};
    SUBCASE("rational") {
        Rational q(-7, 3);
        CHECK(parse_rational(to_string(q)) == q);
    }
    SUBCASE("polynomial") {
        Polynomial p = P("x^2*y - 3/2*x + 1", v);
        CHECK(parse_polynomial(p.to_string(v), v) == p);
    }
    SUBCASE("rational function") {
        RationalFunction f = RF("(x^2+1)/(x*y - 2)", v);
        CHECK(parse_rational_function(f.to_string(v), v) == f);
    }
    SUBCASE("exp function") {
        ExpFunction e = parse_expression("exp(-x)*x + exp(2*x)*(y-1) + 5", v);
        CHECK(parse_expression(e.to_string(v), v) == e);
    }
}
