#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "liouville/ratfun.hpp"

namespace liouville {

// Expression grammar over rational literals and the variable x:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := primary ('^' integer)?        (^ binds tightest)
//   primary:= number | 'x' | '(' expr ')'
// Exponents are integer literals. SyntaxError carries the 0-based offset.
struct ExprAST {
    enum class Kind { number, var, add, sub, mul, div, neg, pow };
    Kind kind = Kind::number;
    Rational value;
    long exponent = 0;
    std::unique_ptr<ExprAST> lhs, rhs;
};

std::unique_ptr<ExprAST> parse_expr_text(std::string_view text);
RatFun eval_ratfun(const ExprAST& ast);
// parse + exact evaluation; ZeroDenominator when a denominator vanishes
RatFun parse_ratfun(std::string_view text);

// Pretty printers. Values with rational coefficients round-trip through
// parse_ratfun to an equal value; surd coefficients render as sqrt(d) terms
// for reports only.
std::string to_text(const Poly& p, const char* var = "x");
std::string to_text(const RatFun& r, const char* var = "x");

}  // namespace liouville
