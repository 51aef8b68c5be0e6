#include "ccx/parser.hpp"

#include <cstdlib>

#include "ccx/lexer.hpp"

namespace ccx {

namespace {

std::optional<BinOp> classify_op(const std::string& lexeme) {
    if (lexeme == "+") return BinOp::Add;
    if (lexeme == "-") return BinOp::Sub;
    if (lexeme == "*") return BinOp::Mul;
    if (lexeme == "/") return BinOp::Div;
    if (lexeme == "<") return BinOp::Lt;
    if (lexeme == ">") return BinOp::Gt;
    if (lexeme == "<=") return BinOp::Le;
    if (lexeme == ">=") return BinOp::Ge;
    if (lexeme == "==") return BinOp::Eq;
    if (lexeme == "!=") return BinOp::Ne;
    return std::nullopt;
}

struct ParseError {
    Diagnostic diag;
};

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    Program parse_program() {
        Program p;
        while (!at(TokenKind::EndOfInput)) p.stmts.push_back(parse_stmt());
        return p;
    }

private:
    const std::vector<Token>& toks_;
    size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    const Token& prev() const { return toks_[pos_ > 0 ? pos_ - 1 : 0]; }
    bool at(TokenKind k) const { return cur().kind == k; }
    void advance() { if (!at(TokenKind::EndOfInput)) ++pos_; }

    [[noreturn]] void fail_here() { throw ParseError{syntax_error(cur().line)}; }
    [[noreturn]] void fail_after_prev() { throw ParseError{syntax_error(prev().line)}; }

    void expect(TokenKind k) {
        if (!at(k)) fail_here();
        advance();
    }

    Stmt parse_stmt() {
        const Token& t = cur();
        if (t.kind == TokenKind::Identifier) {
            std::string target = t.lexeme;
            int line = t.line;
            advance();
            expect(TokenKind::Assign);
            ExprPtr value = parse_expr();
            // A missing ';' is reported where the statement should have
            // ended, not at the token that follows.
            if (!at(TokenKind::Semicolon)) fail_after_prev();
            advance();
            return Stmt{line, AssignStmt{std::move(target), std::move(value)}};
        }
        if (t.kind == TokenKind::KeywordIf || t.kind == TokenKind::KeywordWhile) {
            int line = t.line;
            bool is_if = t.kind == TokenKind::KeywordIf;
            advance();
            expect(TokenKind::LParen);
            ExprPtr cond = parse_expr();
            expect(TokenKind::RParen);
            expect(TokenKind::LBrace);
            std::vector<Stmt> body;
            while (!at(TokenKind::RBrace)) {
                if (at(TokenKind::EndOfInput)) fail_here();
                body.push_back(parse_stmt());
            }
            advance();
            if (is_if) return Stmt{line, IfStmt{std::move(cond), std::move(body)}};
            return Stmt{line, WhileStmt{std::move(cond), std::move(body)}};
        }
        fail_here();
    }

    ExprPtr parse_expr() { return parse_cmp(); }

    ExprPtr parse_cmp() {
        ExprPtr lhs = parse_add();
        while (at(TokenKind::Operator)) {
            auto op = classify_op(cur().lexeme);
            if (!op || !is_comparison(*op)) break;
            int line = cur().line;
            advance();
            lhs = make_binop(line, *op, std::move(lhs), parse_add());
        }
        return lhs;
    }

    ExprPtr parse_add() {
        ExprPtr lhs = parse_mul();
        while (at(TokenKind::Operator) && (cur().lexeme == "+" || cur().lexeme == "-")) {
            BinOp op = *classify_op(cur().lexeme);
            int line = cur().line;
            advance();
            lhs = make_binop(line, op, std::move(lhs), parse_mul());
        }
        return lhs;
    }

    ExprPtr parse_mul() {
        ExprPtr lhs = parse_primary();
        while (at(TokenKind::Operator) && (cur().lexeme == "*" || cur().lexeme == "/")) {
            BinOp op = *classify_op(cur().lexeme);
            int line = cur().line;
            advance();
            lhs = make_binop(line, op, std::move(lhs), parse_primary());
        }
        return lhs;
    }

    ExprPtr parse_primary() {
        const Token& t = cur();
        if (t.kind == TokenKind::IntLiteral) {
            advance();
            return make_int(t.line, std::strtoll(t.lexeme.c_str(), nullptr, 10));
        }
        if (t.kind == TokenKind::Identifier) {
            advance();
            return make_var(t.line, t.lexeme);
        }
        if (t.kind == TokenKind::LParen) {
            advance();
            ExprPtr inner = parse_expr();
            expect(TokenKind::RParen);
            return inner;
        }
        fail_here();
    }
};

}  // namespace

ParseResult parse(const std::vector<Token>& tokens) {
    try {
        return Parser(tokens).parse_program();
    } catch (const ParseError& e) {
        return e.diag;
    }
}

ParseResult parse_source(std::string_view source, int first_line) {
    TokenizeResult toks = tokenize(source, first_line);
    if (const auto* diag = std::get_if<Diagnostic>(&toks)) return *diag;
    return parse(std::get<std::vector<Token>>(toks));
}

ReplParser::FeedResult ReplParser::feed(std::string_view line) {
    if (buffer_.empty()) buffer_first_line_ = next_line_;
    ++next_line_;

    bool blank = line.find_first_not_of(" \t\r\n") == std::string_view::npos;
    if (blank) {
        if (buffer_.empty()) {
            buffer_.clear();
            return NeedMore{};
        }
        // Force-parse whatever is pending; incomplete input surfaces here.
    } else {
        buffer_.append(line);
        buffer_.push_back('\n');
    }

    TokenizeResult toks = tokenize(buffer_, buffer_first_line_);
    if (const auto* diag = std::get_if<Diagnostic>(&toks)) {
        buffer_.clear();
        return *diag;
    }
    const auto& tokens = std::get<std::vector<Token>>(toks);

    if (!blank) {
        int depth = 0;
        for (const auto& t : tokens) {
            if (t.kind == TokenKind::LBrace) ++depth;
            else if (t.kind == TokenKind::RBrace) --depth;
        }
        // Complete once all braces are closed and the buffer ends in ';' or
        // '}'. tokens.back() is end-of-input, so look one before it.
        TokenKind last = tokens.size() >= 2 ? tokens[tokens.size() - 2].kind : TokenKind::EndOfInput;
        bool complete = depth <= 0 &&
                        (last == TokenKind::Semicolon || last == TokenKind::RBrace);
        if (!complete) return NeedMore{};
    }

    ParseResult parsed = parse(tokens);
    buffer_.clear();
    if (auto* diag = std::get_if<Diagnostic>(&parsed)) return *diag;
    return std::move(std::get<Program>(parsed).stmts);
}

}  // namespace ccx
