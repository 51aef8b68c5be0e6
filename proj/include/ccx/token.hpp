#pragma once

#include <string>

namespace ccx {

enum class TokenKind {
    Identifier,
    IntLiteral,
    Operator,
    Assign,
    Semicolon,
    LParen,
    RParen,
    LBrace,
    RBrace,
    KeywordIf,
    KeywordWhile,
    EndOfInput,
};

/// Stable kind name used by `--emit tokens` (LINE:KIND:LEXEME).
const char* token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string lexeme;
    int line;

    bool operator==(const Token&) const = default;
};

}  // namespace ccx
