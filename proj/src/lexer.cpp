#include "ccx/lexer.hpp"

#include <cctype>

namespace ccx {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::IntLiteral: return "int-literal";
        case TokenKind::Operator: return "operator";
        case TokenKind::Assign: return "assign";
        case TokenKind::Semicolon: return "semicolon";
        case TokenKind::LParen: return "lparen";
        case TokenKind::RParen: return "rparen";
        case TokenKind::LBrace: return "lbrace";
        case TokenKind::RBrace: return "rbrace";
        case TokenKind::KeywordIf: return "keyword-if";
        case TokenKind::KeywordWhile: return "keyword-while";
        case TokenKind::EndOfInput: return "end-of-input";
    }
    return "?";
}

namespace {

bool is_ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_ident_part(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

TokenizeResult tokenize(std::string_view src, int first_line) {
    std::vector<Token> out;
    int line = first_line;
    size_t i = 0;
    const size_t n = src.size();

    while (i < n) {
        char c = src[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (is_ident_start(c)) {
            size_t start = i;
            while (i < n && is_ident_part(src[i])) ++i;
            std::string lexeme(src.substr(start, i - start));
            TokenKind kind = TokenKind::Identifier;
            if (lexeme == "if") kind = TokenKind::KeywordIf;
            else if (lexeme == "while") kind = TokenKind::KeywordWhile;
            out.push_back({kind, std::move(lexeme), line});
            continue;
        }
        if (is_digit(c)) {
            size_t start = i;
            while (i < n && is_digit(src[i])) ++i;
            // A digit string followed by '.' is the start of a decimal
            // literal, which the language does not have.
            if (i < n && src[i] == '.') return syntax_error(line);
            out.push_back({TokenKind::IntLiteral, std::string(src.substr(start, i - start)), line});
            continue;
        }
        switch (c) {
            case ';': out.push_back({TokenKind::Semicolon, ";", line}); ++i; continue;
            case '(': out.push_back({TokenKind::LParen, "(", line}); ++i; continue;
            case ')': out.push_back({TokenKind::RParen, ")", line}); ++i; continue;
            case '{': out.push_back({TokenKind::LBrace, "{", line}); ++i; continue;
            case '}': out.push_back({TokenKind::RBrace, "}", line}); ++i; continue;
            case '+': out.push_back({TokenKind::Operator, "+", line}); ++i; continue;
            case '-': out.push_back({TokenKind::Operator, "-", line}); ++i; continue;
            case '*': out.push_back({TokenKind::Operator, "*", line}); ++i; continue;
            case '/': out.push_back({TokenKind::Operator, "/", line}); ++i; continue;
            case '<':
                if (i + 1 < n && src[i + 1] == '=') { out.push_back({TokenKind::Operator, "<=", line}); i += 2; }
                else { out.push_back({TokenKind::Operator, "<", line}); ++i; }
                continue;
            case '>':
                if (i + 1 < n && src[i + 1] == '=') { out.push_back({TokenKind::Operator, ">=", line}); i += 2; }
                else { out.push_back({TokenKind::Operator, ">", line}); ++i; }
                continue;
            case '!':
                if (i + 1 < n && src[i + 1] == '=') { out.push_back({TokenKind::Operator, "!=", line}); i += 2; continue; }
                return syntax_error(line);
            case '=':
                if (i + 1 < n && src[i + 1] == '=') { out.push_back({TokenKind::Operator, "==", line}); i += 2; }
                else { out.push_back({TokenKind::Assign, "=", line}); ++i; }
                continue;
            default:
                return syntax_error(line);
        }
    }
    out.push_back({TokenKind::EndOfInput, "", line});
    return out;
}

}  // namespace ccx
