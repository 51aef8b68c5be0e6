#include "ccx/semantics.hpp"

namespace ccx {

bool SymbolTable::declare(const std::string& name, int line) {
    auto [it, inserted] = map_.try_emplace(name, SymbolInfo{line, -1});
    if (inserted) order_.push_back(name);
    return inserted;
}

bool SymbolTable::contains(const std::string& name) const { return map_.count(name) > 0; }

SymbolInfo* SymbolTable::find(const std::string& name) {
    auto it = map_.find(name);
    return it == map_.end() ? nullptr : &it->second;
}

const SymbolInfo* SymbolTable::find(const std::string& name) const {
    auto it = map_.find(name);
    return it == map_.end() ? nullptr : &it->second;
}

bool SymbolTable::operator==(const SymbolTable& other) const {
    if (order_ != other.order_) return false;
    for (const auto& name : order_) {
        const auto* a = find(name);
        const auto* b = other.find(name);
        if (a->first_line != b->first_line) return false;
    }
    return true;
}

namespace {

void check_expr_uses(const Expr& e, const SymbolTable& table, std::vector<Diagnostic>& out) {
    if (const auto* v = std::get_if<VarRef>(&e.node)) {
        if (!table.contains(v->name)) out.push_back(undeclared_variable(v->name, e.line));
        return;
    }
    if (const auto* b = std::get_if<BinExpr>(&e.node)) {
        check_expr_uses(*b->lhs, table, out);
        check_expr_uses(*b->rhs, table, out);
    }
}

void analyze_stmts(const std::vector<Stmt>& stmts, SymbolTable& table, std::vector<Diagnostic>& out) {
    for (const auto& s : stmts) {
        if (const auto* a = std::get_if<AssignStmt>(&s.node)) {
            // Uses on the right-hand side are checked before the target is
            // declared, so `x = x + 1;` without a prior `x = ...` is an error.
            check_expr_uses(*a->value, table, out);
            table.declare(a->target, s.line);
        } else if (const auto* i = std::get_if<IfStmt>(&s.node)) {
            check_expr_uses(*i->cond, table, out);
            analyze_stmts(i->body, table, out);
        } else {
            const auto& w = std::get<WhileStmt>(s.node);
            check_expr_uses(*w.cond, table, out);
            analyze_stmts(w.body, table, out);
        }
    }
}

void check_expr_supported(const Expr& e, std::vector<Diagnostic>& out) {
    if (const auto* b = std::get_if<BinExpr>(&e.node)) {
        if (b->op == BinOp::Div || is_comparison(b->op))
            out.push_back(unsupported_construct(binop_symbol(b->op), e.line));
        check_expr_supported(*b->lhs, out);
        check_expr_supported(*b->rhs, out);
    }
}

void check_stmt_supported(const Stmt& s, std::vector<Diagnostic>& out) {
    if (const auto* a = std::get_if<AssignStmt>(&s.node)) {
        check_expr_supported(*a->value, out);
    } else if (std::get_if<IfStmt>(&s.node)) {
        out.push_back(unsupported_construct("if", s.line));
    } else {
        out.push_back(unsupported_construct("while", s.line));
    }
}

}  // namespace

AnalyzeResult analyze(const Program& program, SymbolTable seed) {
    SymbolTable table = std::move(seed);
    std::vector<Diagnostic> errors;
    analyze_stmts(program.stmts, table, errors);
    if (!errors.empty()) return errors;
    return table;
}

std::vector<Diagnostic> check_supported(const Program& program) {
    std::vector<Diagnostic> out;
    for (const auto& s : program.stmts) check_stmt_supported(s, out);
    return out;
}

std::vector<Diagnostic> check_supported(const Stmt& stmt) {
    std::vector<Diagnostic> out;
    check_stmt_supported(stmt, out);
    return out;
}

}  // namespace ccx
