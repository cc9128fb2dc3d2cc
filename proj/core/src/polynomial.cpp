#include "symgap/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symgap {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (!symgap::is_zero(c)) p.terms_.emplace(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    Exponents e(nvars, 0);
    e.at(i) = 1;
    return monomial(e, Rational(1));
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
    Polynomial p(static_cast<int>(e.size()));
    if (!symgap::is_zero(c)) p.terms_.emplace(e, c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && symgap::total_degree(terms_.begin()->first) == 0;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

unsigned Polynomial::total_degree() const {
    if (terms_.empty()) return 0;
    return symgap::total_degree(terms_.rbegin()->first);
}

unsigned Polynomial::degree_in(int var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Exponents, Rational>& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    return *terms_.rbegin();
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::logic_error("exponent vector length mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (symgap::is_zero(it->second)) terms_.erase(it);
    } else if (symgap::is_zero(c)) {
        terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

namespace {
// Constants (in particular default-constructed zeros) may live in a smaller
// ring; extend them on the fly so generic template code can mix them in.
void align_rings(Polynomial& a, Polynomial& b) {
    if (a.nvars() == b.nvars()) return;
    if (a.nvars() < b.nvars() && a.is_constant()) a = a.extended(b.nvars());
    else if (b.nvars() < a.nvars() && b.is_constant()) b = b.extended(a.nvars());
    else throw std::logic_error("polynomial ring mismatch");
}
} // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial a = *this, b = o;
    align_rings(a, b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial a = *this, b = o;
    align_rings(a, b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) {
        Polynomial a = *this, b = o;
        align_rings(a, b);
        return a * b;
    }
    Polynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(nvars_);
    if (symgap::is_zero(c)) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = constant(nvars_, Rational(1));
    Polynomial base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var) == 0) continue;
        Exponents d = e;
        --d[var];
        r.add_term(d, c * Rational(e[var]));
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) < nvars_)
        throw std::logic_error("evaluation point too short");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::substitute(int var, const Rational& value) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (unsigned k = 0; k < e.at(var); ++k) t *= value;
        Exponents d = e;
        d[var] = 0;
        r.add_term(d, t);
    }
    return r;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
    if (value.nvars() != nvars_) throw std::logic_error("substitute: ring mismatch");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d[var] = 0;
        r = r + monomial(d, c) * value.pow(e.at(var));
    }
    return r;
}

Polynomial Polynomial::extended(int new_nvars) const {
    if (new_nvars < nvars_) throw std::logic_error("extended: cannot shrink ring");
    Polynomial r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d.resize(new_nvars, 0);
        r.terms_.emplace(d, c);
    }
    return r;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rational r(num_gcd, den_lcm);
    if (leading_term().second < 0) r = -r;
    return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest-degree terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed_coef = false;
        if (a != 1 || symgap::total_degree(e) == 0) {
            os << a.str();
            printed_coef = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed_coef || os.tellp() > 0) {
                // separator only if something precedes in this term
            }
            if (printed_coef) os << "*";
            os << names.at(i);
            if (e[i] > 1) os << "^" << e[i];
            printed_coef = true;
        }
    }
    return os.str();
}

// ---- exact division and gcd ----

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.nvars() != b.nvars()) throw std::logic_error("polynomial ring mismatch");
    const int n = a.nvars();
    Polynomial rem = a, quot(n);
    const auto& blt = b.leading_term();
    while (!rem.is_zero()) {
        const auto& rlt = rem.leading_term();
        Exponents q(n);
        for (int i = 0; i < n; ++i) {
            if (rlt.first[i] < blt.first[i])
                throw std::domain_error("inexact polynomial division");
            q[i] = rlt.first[i] - blt.first[i];
        }
        Polynomial m = Polynomial::monomial(q, rlt.second / blt.second);
        quot = quot + m;
        rem = rem - m * b;
    }
    return quot;
}

namespace {

// Split p as a univariate polynomial in `var` with polynomial coefficients.
std::map<unsigned, Polynomial> split_by_var(const Polynomial& p, int var) {
    std::map<unsigned, Polynomial> out;
    for (const auto& [e, c] : p.terms()) {
        Exponents d = e;
        unsigned k = d[var];
        d[var] = 0;
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, Polynomial(p.nvars())).first;
        it->second.add_term(d, c);
    }
    return out;
}

Polynomial join_by_var(const std::map<unsigned, Polynomial>& coeffs, int var, int nvars) {
    Polynomial r(nvars);
    for (const auto& [k, c] : coeffs) {
        Exponents e(nvars, 0);
        e[var] = k;
        r = r + Polynomial::monomial(e, Rational(1)) * c;
    }
    return r;
}

// gcd of the polynomial coefficients of p viewed in `var` (the content),
// computed by chaining poly_gcd over one fewer effective variable.
Polynomial var_content(const Polynomial& p, int var, unsigned cap) {
    Polynomial g(p.nvars());
    for (const auto& [k, c] : split_by_var(p, var)) {
        g = g.is_zero() ? c : poly_gcd(g, c, cap);
        if (g.is_constant() && !g.is_zero()) return Polynomial::constant(p.nvars(), Rational(1));
    }
    return g;
}

// Leading coefficient of p viewed as univariate in `var` (a polynomial in the
// remaining variables), plus its degree.
std::pair<unsigned, Polynomial> var_leading(const Polynomial& p, int var) {
    unsigned d = p.degree_in(var);
    Polynomial lc(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] != d) continue;
        Exponents f = e;
        f[var] = 0;
        lc.add_term(f, c);
    }
    return {d, lc};
}

// Standard pseudo-remainder prem(a, b) in `var`: lc(b)^(dega-degb+1) * a mod b.
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, int var) {
    auto [db, blc] = var_leading(b, var);
    unsigned da = a.degree_in(var);
    if (a.is_zero() || da < db) return a;
    // pre-scale so every division step below is exact
    a = a * blc.pow(da - db + 1);
    while (!a.is_zero()) {
        unsigned d = a.degree_in(var);
        if (d < db) break;
        auto [dd, alc] = var_leading(a, var);
        Polynomial q = divide_exact(alc, blc);
        Exponents shift(a.nvars(), 0);
        shift[var] = d - db;
        a = a - Polynomial::monomial(shift, Rational(1)) * q * b;
    }
    return a;
}

} // namespace

// Subresultant PRS gcd with recursive content extraction.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b, unsigned degree_cap) {
    if (a.nvars() != b.nvars()) throw std::logic_error("polynomial ring mismatch");
    const int n = a.nvars();
    auto normalized = [](Polynomial p) {
        if (p.is_zero()) return p;
        Rational c = p.content();
        return p * (Rational(1) / c);
    };
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(n, Rational(1));
    if (a.total_degree() > degree_cap || b.total_degree() > degree_cap)
        return Polynomial::constant(n, Rational(1));

    // pick the last variable occurring in either polynomial as the main one
    int var = -1;
    for (int i = n - 1; i >= 0; --i) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) { var = i; break; }
    }
    if (var < 0) return Polynomial::constant(n, Rational(1));

    Polynomial ca = var_content(a, var, degree_cap);
    Polynomial cb = var_content(b, var, degree_cap);
    Polynomial u = normalized(divide_exact(a, ca));
    Polynomial v = normalized(divide_exact(b, cb));
    if (u.degree_in(var) < v.degree_in(var)) std::swap(u, v);

    Polynomial g = Polynomial::constant(n, Rational(1));
    Polynomial h = Polynomial::constant(n, Rational(1));
    while (true) {
        unsigned du = u.degree_in(var), dv = v.degree_in(var);
        unsigned delta = du - dv;
        Polynomial r = pseudo_rem(u, v, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            // gcd of the primitive parts is trivial in `var`
            v = Polynomial::constant(n, Rational(1));
            break;
        }
        u = v;
        Polynomial divisor = g * h.pow(delta);
        v = divide_exact(r, divisor);
        g = var_leading(u, var).second;
        // h = g^delta / h^(delta-1), exact
        Polynomial gd = g.pow(delta);
        h = (delta == 0) ? h : (delta == 1 ? gd : divide_exact(gd, h.pow(delta - 1)));
    }
    Polynomial result = v.is_constant()
                            ? Polynomial::constant(n, Rational(1))
                            : normalized(divide_exact(v, var_content(v, var, degree_cap)));
    result = result * poly_gcd(ca, cb, degree_cap);
    return normalized(result);
}

} // namespace symgap
