#include "symgap/parser.hpp"

#include <cctype>

#include "symgap/errors.hpp"

namespace symgap {

namespace {

struct Token {
    enum Kind { Number, Ident, Op, End } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, "", i_};
            return;
        }
        char c = s_[i_];
        std::size_t start = i_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            tok_ = {Token::Number, s_.substr(start, i_ - start), start};
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            tok_ = {Token::Ident, s_.substr(start, i_ - start), start};
        } else if (std::string("+-*/^()").find(c) != std::string::npos) {
            ++i_;
            tok_ = {Token::Op, std::string(1, c), start};
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                             std::to_string(start));
        }
    }
    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars,
           const std::map<std::string, Rational>& params)
        : lex_(text), vars_(vars), params_(params), n_(static_cast<int>(vars.size())) {}

    ExpFunction parse() {
        ExpFunction e = expr();
        if (lex_.peek().kind != Token::End)
            throw ParseError("trailing input at position " + std::to_string(lex_.peek().pos));
        return substitute_params(e);
    }

private:
    ExpFunction substitute_params(ExpFunction e) {
        for (const auto& [name, value] : params_) {
            for (int i = 0; i < n_; ++i)
                if (vars_[i] == name) e = e.substitute(i, value);
        }
        return e;
    }

    ExpFunction expr() {
        bool neg = false;
        if (lex_.peek().kind == Token::Op &&
            (lex_.peek().text == "-" || lex_.peek().text == "+"))
            neg = lex_.next().text == "-";
        ExpFunction acc = term();
        if (neg) acc = -acc;
        while (lex_.peek().kind == Token::Op &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            bool minus = lex_.next().text == "-";
            ExpFunction t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    ExpFunction term() {
        ExpFunction acc = power();
        while (lex_.peek().kind == Token::Op &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            bool div = lex_.next().text == "/";
            ExpFunction f = power();
            if (div) {
                if (!f.is_rational())
                    throw ParseError("division by an exponential is not supported");
                acc = acc / f;
            } else {
                acc = acc * f;
            }
        }
        return acc;
    }

    ExpFunction power() {
        ExpFunction base = atom();
        if (lex_.peek().kind == Token::Op && lex_.peek().text == "^") {
            lex_.next();
            bool neg = false;
            if (lex_.peek().kind == Token::Op && lex_.peek().text == "-") {
                lex_.next();
                neg = true;
            }
            Token t = lex_.next();
            if (t.kind != Token::Number)
                throw ParseError("expected integer exponent at position " + std::to_string(t.pos));
            unsigned k = static_cast<unsigned>(std::stoul(t.text));
            ExpFunction acc = ExpFunction::constant(n_, Rational(1));
            for (unsigned i = 0; i < k; ++i) acc = acc * base;
            if (neg) {
                if (!acc.is_rational()) throw ParseError("negative power of an exponential");
                acc = ExpFunction::constant(n_, Rational(1)) / acc;
            }
            return acc;
        }
        return base;
    }

    ExpFunction atom() {
        Token t = lex_.next();
        if (t.kind == Token::Number) return ExpFunction::constant(n_, Rational(Integer(t.text)));
        if (t.kind == Token::Op && t.text == "(") {
            ExpFunction e = expr();
            expect(")");
            return e;
        }
        if (t.kind == Token::Op && t.text == "-") return -atom();
        if (t.kind == Token::Ident) {
            if (t.text == "exp") {
                expect("(");
                ExpFunction arg = expr();
                expect(")");
                return make_exponential(arg, t.pos);
            }
            for (int i = 0; i < n_; ++i)
                if (vars_[i] == t.text) return ExpFunction::variable(n_, i);
            auto it = params_.find(t.text);
            if (it != params_.end()) return ExpFunction::constant(n_, it->second);
            throw ParseError("unknown identifier '" + t.text + "' at position " +
                             std::to_string(t.pos));
        }
        throw ParseError("unexpected token '" + t.text + "' at position " + std::to_string(t.pos));
    }

    ExpFunction make_exponential(const ExpFunction& arg, std::size_t pos) {
        ExpFunction a = substitute_params(arg);
        if (!a.is_rational())
            throw ParseError("nested exponentials at position " + std::to_string(pos));
        RationalFunction rf = a.rational_part();
        if (!rf.is_polynomial())
            throw ParseError("exp() argument must be a linear form");
        const Polynomial& p = rf.num();
        Rational d = rf.den().constant_value();
        ExpFunction::Frequency freq(n_, Rational(0));
        for (const auto& [e, c] : p.terms()) {
            unsigned deg = total_degree(e);
            if (deg == 0)
                throw ParseError("exp() argument must have zero constant term");
            if (deg > 1) throw ParseError("exp() argument must be a linear form");
            for (int i = 0; i < n_; ++i)
                if (e[i] == 1) freq[i] = c / d;
        }
        return ExpFunction::exponential(freq);
    }

    void expect(const std::string& op) {
        Token t = lex_.next();
        if (t.kind != Token::Op || t.text != op)
            throw ParseError("expected '" + op + "' at position " + std::to_string(t.pos));
    }

    Lexer lex_;
    const std::vector<std::string>& vars_;
    const std::map<std::string, Rational>& params_;
    int n_;
};

} // namespace

ExpFunction parse_expression(const std::string& text, const std::vector<std::string>& variables,
                             const std::map<std::string, Rational>& params) {
    return Parser(text, variables, params).parse();
}

RationalFunction parse_rational_function(const std::string& text,
                                         const std::vector<std::string>& variables,
                                         const std::map<std::string, Rational>& params) {
    ExpFunction e = parse_expression(text, variables, params);
    if (!e.is_rational()) throw ParseError("expected a rational expression: " + text);
    return e.rational_part();
}

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables,
                            const std::map<std::string, Rational>& params) {
    RationalFunction f = parse_rational_function(text, variables, params);
    if (!f.is_polynomial()) throw ParseError("expected a polynomial expression: " + text);
    Rational d = f.den().constant_value();
    return f.num() * (Rational(1) / d);
}

} // namespace symgap
