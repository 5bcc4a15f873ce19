#include "liouville/expr.hpp"

#include <cctype>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::unique_ptr<ExprAST> make(ExprAST::Kind kind, std::unique_ptr<ExprAST> lhs,
                                  std::unique_ptr<ExprAST> rhs) {
        auto node = std::make_unique<ExprAST>();
        node->kind = kind;
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        return node;
    }

    mpz_class digits() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw SyntaxError(pos, "digits");
        return mpz_class(std::string(text.substr(start, pos - start)));
    }

    std::unique_ptr<ExprAST> expr() {
        auto node = term();
        for (;;) {
            if (consume('+'))
                node = make(ExprAST::Kind::add, std::move(node), term());
            else if (consume('-'))
                node = make(ExprAST::Kind::sub, std::move(node), term());
            else
                return node;
        }
    }

    std::unique_ptr<ExprAST> term() {
        auto node = factor();
        for (;;) {
            if (consume('*'))
                node = make(ExprAST::Kind::mul, std::move(node), factor());
            else if (consume('/'))
                node = make(ExprAST::Kind::div, std::move(node), factor());
            else
                return node;
        }
    }

    std::unique_ptr<ExprAST> factor() {
        if (consume('-')) return make(ExprAST::Kind::neg, factor(), nullptr);
        return power();
    }

    std::unique_ptr<ExprAST> power() {
        auto base = primary();
        if (!consume('^')) return base;
        long sign = consume('-') ? -1 : 1;
        skip_ws();
        mpz_class e = digits();
        if (!mpz_fits_slong_p(e.get_mpz_t())) throw SyntaxError(pos, "a smaller exponent");
        auto node = make(ExprAST::Kind::pow, std::move(base), nullptr);
        node->exponent = sign * e.get_si();
        return node;
    }

    std::unique_ptr<ExprAST> primary() {
        char c = peek();
        if (c == '(') {
            ++pos;
            auto node = expr();
            if (!consume(')')) throw SyntaxError(pos, "')'");
            return node;
        }
        if (c == 'x') {
            ++pos;
            auto node = std::make_unique<ExprAST>();
            node->kind = ExprAST::Kind::var;
            return node;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto node = std::make_unique<ExprAST>();
            node->kind = ExprAST::Kind::number;
            node->value = Rational(digits(), 1);
            return node;
        }
        throw SyntaxError(pos, "a number, 'x', or '('");
    }

    std::unique_ptr<ExprAST> run() {
        auto node = expr();
        skip_ws();
        if (pos != text.size()) throw SyntaxError(pos, "end of input");
        return node;
    }
};

}  // namespace

std::unique_ptr<ExprAST> parse_expr_text(std::string_view text) {
    Parser p{text};
    return p.run();
}

RatFun eval_ratfun(const ExprAST& ast) {
    switch (ast.kind) {
        case ExprAST::Kind::number: return RatFun(ast.value);
        case ExprAST::Kind::var: return RatFun::x();
        case ExprAST::Kind::add: return eval_ratfun(*ast.lhs) + eval_ratfun(*ast.rhs);
        case ExprAST::Kind::sub: return eval_ratfun(*ast.lhs) - eval_ratfun(*ast.rhs);
        case ExprAST::Kind::mul: return eval_ratfun(*ast.lhs) * eval_ratfun(*ast.rhs);
        case ExprAST::Kind::div: {
            RatFun den = eval_ratfun(*ast.rhs);
            if (den.is_zero()) throw ZeroDenominator("division by an expression equal to zero");
            return eval_ratfun(*ast.lhs) / den;
        }
        case ExprAST::Kind::neg: return -eval_ratfun(*ast.lhs);
        case ExprAST::Kind::pow: {
            RatFun base = eval_ratfun(*ast.lhs);
            if (ast.exponent < 0 && base.is_zero())
                throw ZeroDenominator("zero raised to a negative power");
            return base.pow(ast.exponent);
        }
    }
    throw Error("unreachable expression kind");
}

RatFun parse_ratfun(std::string_view text) { return eval_ratfun(*parse_expr_text(text)); }

namespace {

std::string coeff_text(const SurdSum& s) {
    if (auto q = s.as_rational()) return q->str();
    return "(" + s.str() + ")";
}

// |coeff| * x^deg as a printable term; magnitude 1 drops the coefficient
std::string term_text(const SurdSum& mag, int deg, const char* var) {
    std::string coeff = coeff_text(mag);
    if (deg == 0) return coeff;
    std::string xpow = deg == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(deg);
    if (mag == SurdSum(1)) return xpow;
    return coeff + "*" + xpow;
}

}  // namespace

std::string to_text(const Poly& p, const char* var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const SurdSum& c = p.coeff(i);
        if (c.is_zero()) continue;
        bool neg = false;
        SurdSum mag = c;
        if (auto q = c.as_rational()) {
            if (q->sign() < 0) {
                neg = true;
                mag = SurdSum(q->abs());
            }
        }
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += term_text(mag, i, var);
    }
    return out;
}

std::string to_text(const RatFun& r, const char* var) {
    if (r.is_poly()) return to_text(r.num(), var);
    return "(" + to_text(r.num(), var) + ")/(" + to_text(r.den(), var) + ")";
}

}  // namespace liouville
