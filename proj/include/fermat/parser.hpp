#pragma once

// Text grammar (whitespace-insensitive):
//
//   expr   := term (("+"|"-") term)* ;
//   term   := unary (("*"|"/") unary)* ;
//   unary  := "-" unary | factor ;
//   factor := base ("^" UINT)? ;
//   base   := "z" | "i" | UINT | "(" expr ")" | "exp" "(" expr ")" ;
//
// `i` is the imaginary unit. Rationals are written by division ("3/2"). The
// argument of exp() must be a polynomial without nested exp.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fermat/exppoly.hpp"

namespace fermat {

enum class TokenKind { Int, IdentZ, IdentI, Exp, Plus, Minus, Star, Slash, Caret, LParen, RParen, Eof };

struct Token {
    TokenKind kind;
    std::size_t begin;  // byte offsets [begin, end)
    std::size_t end;
    std::string text;
};

/// Throws ParseError(Kind::Lex) on an unknown character or word.
std::vector<Token> tokenize(std::string_view input);

/// Tagged by the smallest class containing the value: a polynomial stays a
/// Poly even when written with division by constants, and an exponential
/// polynomial that collapses to a rational function is stored as one.
using ParsedExpr = std::variant<Poly, RatFun, ExpPoly>;

ParsedExpr parse(std::string_view input);

/// Convenience wrappers that lift or reject the parsed class.
Poly parse_poly(std::string_view input);
RatFun parse_ratfun(std::string_view input);
ExpPoly parse_exppoly(std::string_view input);
GaussianRational parse_constant(std::string_view input);

/// Lift to the smallest class holding the value.
ParsedExpr minimal(const ExpPoly& e);

std::string print_canonical(const ParsedExpr& e);
std::string print_canonical(const ExpPoly& e);

}  // namespace fermat
