#include <cctype>

#include "fermat/error.hpp"
#include "fermat/parser.hpp"

namespace fermat {

std::vector<Token> tokenize(std::string_view input) {
    std::vector<Token> out;
    std::size_t pos = 0;
    auto single = [&](TokenKind kind) {
        out.push_back({kind, pos, pos + 1, std::string(1, input[pos])});
        ++pos;
    };
    while (pos < input.size()) {
        auto ch = static_cast<unsigned char>(input[pos]);
        if (std::isspace(ch)) {
            ++pos;
            continue;
        }
        if (std::isdigit(ch)) {
            std::size_t start = pos;
            while (pos < input.size() && std::isdigit(static_cast<unsigned char>(input[pos]))) ++pos;
            out.push_back({TokenKind::Int, start, pos, std::string(input.substr(start, pos - start))});
            continue;
        }
        if (std::isalpha(ch)) {
            std::size_t start = pos;
            while (pos < input.size() && std::isalnum(static_cast<unsigned char>(input[pos]))) ++pos;
            std::string word(input.substr(start, pos - start));
            TokenKind kind;
            if (word == "z") {
                kind = TokenKind::IdentZ;
            } else if (word == "i") {
                kind = TokenKind::IdentI;
            } else if (word == "exp") {
                kind = TokenKind::Exp;
            } else {
                throw ParseError(ParseError::Kind::Lex, start, "unknown identifier '" + word + "'");
            }
            out.push_back({kind, start, pos, std::move(word)});
            continue;
        }
        switch (ch) {
            case '+': single(TokenKind::Plus); break;
            case '-': single(TokenKind::Minus); break;
            case '*': single(TokenKind::Star); break;
            case '/': single(TokenKind::Slash); break;
            case '^': single(TokenKind::Caret); break;
            case '(': single(TokenKind::LParen); break;
            case ')': single(TokenKind::RParen); break;
            default:
                throw ParseError(ParseError::Kind::Lex, pos, std::string("unexpected character '") + input[pos] + "'");
        }
    }
    out.push_back({TokenKind::Eof, input.size(), input.size(), ""});
    return out;
}

}  // namespace fermat
