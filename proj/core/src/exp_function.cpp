#include "symgap/exp_function.hpp"

#include <sstream>

namespace symgap {

void ExpFunction::add_term(const Frequency& freq, const RationalFunction& c) {
    if (static_cast<int>(freq.size()) != nvars_)
        throw std::logic_error("frequency vector length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(freq, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExpFunction ExpFunction::operator-() const {
    ExpFunction r(nvars_);
    for (const auto& [f, c] : terms_) r.terms_.emplace(f, -c);
    return r;
}

ExpFunction ExpFunction::operator+(const ExpFunction& o) const {
    if (nvars_ != o.nvars_) throw std::logic_error("ExpFunction ring mismatch");
    ExpFunction r = *this;
    for (const auto& [f, c] : o.terms_) r.add_term(f, c);
    return r;
}

ExpFunction ExpFunction::operator-(const ExpFunction& o) const {
    if (nvars_ != o.nvars_) throw std::logic_error("ExpFunction ring mismatch");
    ExpFunction r = *this;
    for (const auto& [f, c] : o.terms_) r.add_term(f, -c);
    return r;
}

ExpFunction ExpFunction::operator*(const ExpFunction& o) const {
    if (nvars_ != o.nvars_) throw std::logic_error("ExpFunction ring mismatch");
    ExpFunction r(nvars_);
    Frequency f(nvars_);
    for (const auto& [fa, ca] : terms_) {
        for (const auto& [fb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) f[i] = fa[i] + fb[i];
            r.add_term(f, ca * cb);
        }
    }
    return r;
}

ExpFunction ExpFunction::operator*(const Rational& c) const {
    ExpFunction r(nvars_);
    if (symgap::is_zero(c)) return r;
    for (const auto& [f, t] : terms_) r.terms_.emplace(f, t * c);
    return r;
}

ExpFunction ExpFunction::operator/(const ExpFunction& o) const {
    if (!o.is_rational())
        throw std::domain_error("division by an ExpFunction with nonzero frequencies");
    if (o.is_zero()) throw std::domain_error("division by zero");
    RationalFunction d = o.rational_part();
    ExpFunction r(nvars_);
    for (const auto& [f, c] : terms_) r.add_term(f, c / d);
    return r;
}

ExpFunction ExpFunction::derivative(int var) const {
    ExpFunction r(nvars_);
    for (const auto& [f, c] : terms_) {
        RationalFunction d = c.derivative(var) + c * f.at(var);
        r.add_term(f, d);
    }
    return r;
}

ExpFunction ExpFunction::substitute(int var, const Rational& value) const {
    ExpFunction r(nvars_);
    for (const auto& [f, c] : terms_) {
        if (!symgap::is_zero(f.at(var)) && !symgap::is_zero(value))
            throw std::domain_error(
                "cannot substitute a nonzero rational into an exponential frequency");
        Frequency g = f;
        g[var] = Rational(0);
        r.add_term(g, c.substitute(var, value));
    }
    return r;
}

std::string ExpFunction::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [f, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool has_freq = false;
        for (const auto& l : f)
            if (!symgap::is_zero(l)) has_freq = true;
        if (!has_freq) {
            os << c.to_string(names);
            continue;
        }
        os << "(" << c.to_string(names) << ")*exp(";
        bool f1 = true;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (symgap::is_zero(f[i])) continue;
            if (!f1) os << " + ";
            f1 = false;
            if (f[i] != 1) os << f[i].str() << "*";
            os << names.at(i);
        }
        os << ")";
    }
    return os.str();
}

} // namespace symgap
