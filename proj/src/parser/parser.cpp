#include <optional>

#include "fermat/error.hpp"
#include "fermat/parser.hpp"

namespace fermat {

namespace {

constexpr unsigned long kMaxPower = 1000;

struct Value {
    ExpPoly value;
    bool uses_exp = false;
};

std::optional<RatFun> as_ratfun(const ExpPoly& e) {
    if (e.is_zero()) return RatFun();
    if (e.terms().size() != 1) return std::nullopt;
    const auto& [key, coeff] = *e.terms().begin();
    if (!key.is_zero() || coeff.terms().size() != 1) return std::nullopt;
    const auto& [shift, r] = *coeff.terms().begin();
    if (!shift.is_zero()) return std::nullopt;
    return r;
}

class Parser {
public:
    explicit Parser(std::string_view input) : tokens_(tokenize(input)) {}

    Value parse_all() {
        Value v = expr();
        if (peek().kind != TokenKind::Eof) fail("'+', '-', '*', '/', '^' or end of input");
        return v;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        std::string found = t.kind == TokenKind::Eof ? "end of input" : "'" + t.text + "'";
        throw ParseError(ParseError::Kind::Syntax, t.begin, "expected " + expected + ", found " + found);
    }

    void expect(TokenKind kind, const char* what) {
        if (peek().kind != kind) fail(what);
        advance();
    }

    Value expr() {
        Value acc = term();
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
            bool plus = advance().kind == TokenKind::Plus;
            Value rhs = term();
            if (plus) {
                acc.value += rhs.value;
            } else {
                acc.value -= rhs.value;
            }
            acc.uses_exp = acc.uses_exp || rhs.uses_exp;
        }
        return acc;
    }

    Value term() {
        Value acc = unary();
        while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
            const Token& op = advance();
            Value rhs = unary();
            if (op.kind == TokenKind::Star) {
                acc.value = acc.value * rhs.value;
            } else {
                acc.value = acc.value * invert(rhs.value, op.begin);
            }
            acc.uses_exp = acc.uses_exp || rhs.uses_exp;
        }
        return acc;
    }

    static ExpPoly invert(const ExpPoly& divisor, std::size_t offset) {
        if (divisor.is_zero()) throw ParseError(ParseError::Kind::DivisionByZero, offset, "division by zero");
        if (!divisor.is_single_term()) {
            throw ParseError(ParseError::Kind::NotInvertible, offset, "divisor is a sum of exponential terms");
        }
        const auto& [key, coeff] = *divisor.terms().begin();
        const auto& [shift, r] = *coeff.terms().begin();
        return ExpPoly::from_term(r.inverse(), -key - Poly(shift));
    }

    Value unary() {
        if (peek().kind == TokenKind::Minus) {
            advance();
            Value v = unary();
            v.value = -v.value;
            return v;
        }
        return factor();
    }

    Value factor() {
        Value b = base();
        if (peek().kind != TokenKind::Caret) return b;
        advance();
        const Token& exp_tok = peek();
        if (exp_tok.kind != TokenKind::Int) fail("nonnegative integer exponent");
        advance();
        if (exp_tok.text.size() > 6 || std::stoul(exp_tok.text) > kMaxPower) {
            throw ParseError(ParseError::Kind::ExponentTooLarge, exp_tok.begin, "exponent too large");
        }
        b.value = pow(b.value, static_cast<unsigned>(std::stoul(exp_tok.text)));
        return b;
    }

    Value base() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::IdentZ:
                advance();
                return {ExpPoly(RatFun(Poly::z())), false};
            case TokenKind::IdentI:
                advance();
                return {ExpPoly(RatFun(GaussianRational::i())), false};
            case TokenKind::Int: {
                advance();
                mpz_class n(t.text, 10);
                return {ExpPoly(RatFun(GaussianRational(Rational(n)))), false};
            }
            case TokenKind::LParen: {
                advance();
                Value v = expr();
                expect(TokenKind::RParen, "')'");
                return v;
            }
            case TokenKind::Exp: {
                advance();
                expect(TokenKind::LParen, "'(' after exp");
                std::size_t arg_begin = peek().begin;
                Value arg = expr();
                expect(TokenKind::RParen, "')'");
                if (arg.uses_exp) {
                    throw ParseError(ParseError::Kind::NonPolynomialExponent, arg_begin, "nested exp in exponent");
                }
                auto r = as_ratfun(arg.value);
                if (!r || !r->is_polynomial()) {
                    throw ParseError(ParseError::Kind::NonPolynomialExponent, arg_begin,
                                     "exponent is not a polynomial");
                }
                Poly exponent = r->num() * r->den().leading().inverse();
                return {ExpPoly::from_term(RatFun(1), exponent), true};
            }
            default:
                fail("'z', 'i', integer, '(' or 'exp'");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

ParsedExpr minimal(const ExpPoly& e) {
    auto r = as_ratfun(e);
    if (!r) return e;
    if (r->is_polynomial()) return r->num() * r->den().leading().inverse();
    return *r;
}

ParsedExpr parse(std::string_view input) {
    Parser parser(input);
    return minimal(parser.parse_all().value);
}

Poly parse_poly(std::string_view input) {
    ParsedExpr e = parse(input);
    if (auto* p = std::get_if<Poly>(&e)) return *p;
    throw ParseError(ParseError::Kind::Syntax, 0, "expected a polynomial");
}

RatFun parse_ratfun(std::string_view input) {
    ParsedExpr e = parse(input);
    if (auto* p = std::get_if<Poly>(&e)) return *p;
    if (auto* r = std::get_if<RatFun>(&e)) return *r;
    throw ParseError(ParseError::Kind::Syntax, 0, "expected a rational function");
}

ExpPoly parse_exppoly(std::string_view input) {
    ParsedExpr e = parse(input);
    return std::visit([](const auto& v) { return ExpPoly(v); }, e);
}

GaussianRational parse_constant(std::string_view input) {
    Poly p = parse_poly(input);
    if (!p.is_constant()) throw ParseError(ParseError::Kind::Syntax, 0, "expected a constant");
    return p.constant_term();
}

}  // namespace fermat
