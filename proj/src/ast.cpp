#include "ccx/ast.hpp"

#include <sstream>

namespace ccx {

const char* binop_symbol(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "/";
        case BinOp::Lt: return "<";
        case BinOp::Gt: return ">";
        case BinOp::Le: return "<=";
        case BinOp::Ge: return ">=";
        case BinOp::Eq: return "==";
        case BinOp::Ne: return "!=";
    }
    return "?";
}

bool is_comparison(BinOp op) {
    switch (op) {
        case BinOp::Lt:
        case BinOp::Gt:
        case BinOp::Le:
        case BinOp::Ge:
        case BinOp::Eq:
        case BinOp::Ne:
            return true;
        default:
            return false;
    }
}

ExprPtr make_int(int line, long long value) {
    return std::make_unique<Expr>(Expr{line, IntLit{value}});
}

ExprPtr make_var(int line, std::string name) {
    return std::make_unique<Expr>(Expr{line, VarRef{std::move(name)}});
}

ExprPtr make_binop(int line, BinOp op, ExprPtr lhs, ExprPtr rhs) {
    return std::make_unique<Expr>(Expr{line, BinExpr{op, std::move(lhs), std::move(rhs)}});
}

ExprPtr clone(const Expr& e) {
    if (const auto* i = std::get_if<IntLit>(&e.node)) return make_int(e.line, i->value);
    if (const auto* v = std::get_if<VarRef>(&e.node)) return make_var(e.line, v->name);
    const auto& b = std::get<BinExpr>(e.node);
    return make_binop(e.line, b.op, clone(*b.lhs), clone(*b.rhs));
}

Stmt clone(const Stmt& s) {
    if (const auto* a = std::get_if<AssignStmt>(&s.node))
        return Stmt{s.line, AssignStmt{a->target, clone(*a->value)}};
    if (const auto* i = std::get_if<IfStmt>(&s.node)) {
        std::vector<Stmt> body;
        for (const auto& st : i->body) body.push_back(clone(st));
        return Stmt{s.line, IfStmt{clone(*i->cond), std::move(body)}};
    }
    const auto& w = std::get<WhileStmt>(s.node);
    std::vector<Stmt> body;
    for (const auto& st : w.body) body.push_back(clone(st));
    return Stmt{s.line, WhileStmt{clone(*w.cond), std::move(body)}};
}

Program clone(const Program& p) {
    Program out;
    for (const auto& s : p.stmts) out.stmts.push_back(clone(s));
    return out;
}

bool same_shape(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* i = std::get_if<IntLit>(&a.node))
        return i->value == std::get<IntLit>(b.node).value;
    if (const auto* v = std::get_if<VarRef>(&a.node))
        return v->name == std::get<VarRef>(b.node).name;
    const auto& x = std::get<BinExpr>(a.node);
    const auto& y = std::get<BinExpr>(b.node);
    return x.op == y.op && same_shape(*x.lhs, *y.lhs) && same_shape(*x.rhs, *y.rhs);
}

bool same_shape(const Stmt& a, const Stmt& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* x = std::get_if<AssignStmt>(&a.node)) {
        const auto& y = std::get<AssignStmt>(b.node);
        return x->target == y.target && same_shape(*x->value, *y.value);
    }
    auto bodies_equal = [](const std::vector<Stmt>& u, const std::vector<Stmt>& v) {
        if (u.size() != v.size()) return false;
        for (size_t i = 0; i < u.size(); ++i)
            if (!same_shape(u[i], v[i])) return false;
        return true;
    };
    if (const auto* x = std::get_if<IfStmt>(&a.node)) {
        const auto& y = std::get<IfStmt>(b.node);
        return same_shape(*x->cond, *y.cond) && bodies_equal(x->body, y.body);
    }
    const auto& x = std::get<WhileStmt>(a.node);
    const auto& y = std::get<WhileStmt>(b.node);
    return same_shape(*x.cond, *y.cond) && bodies_equal(x.body, y.body);
}

bool same_shape(const Program& a, const Program& b) {
    if (a.stmts.size() != b.stmts.size()) return false;
    for (size_t i = 0; i < a.stmts.size(); ++i)
        if (!same_shape(a.stmts[i], b.stmts[i])) return false;
    return true;
}

namespace {

void expr_source(const Expr& e, std::ostream& os) {
    if (const auto* i = std::get_if<IntLit>(&e.node)) {
        os << i->value;
    } else if (const auto* v = std::get_if<VarRef>(&e.node)) {
        os << v->name;
    } else {
        const auto& b = std::get<BinExpr>(e.node);
        os << '(';
        expr_source(*b.lhs, os);
        os << ' ' << binop_symbol(b.op) << ' ';
        expr_source(*b.rhs, os);
        os << ')';
    }
}

void stmt_source(const Stmt& s, std::ostream& os, int indent) {
    std::string pad(indent * 2, ' ');
    if (const auto* a = std::get_if<AssignStmt>(&s.node)) {
        os << pad << a->target << " = ";
        expr_source(*a->value, os);
        os << ";\n";
        return;
    }
    const ExprPtr* cond;
    const std::vector<Stmt>* body;
    const char* kw;
    if (const auto* i = std::get_if<IfStmt>(&s.node)) {
        cond = &i->cond; body = &i->body; kw = "if";
    } else {
        const auto& w = std::get<WhileStmt>(s.node);
        cond = &w.cond; body = &w.body; kw = "while";
    }
    os << pad << kw << " (";
    expr_source(**cond, os);
    os << ")\n" << pad << "{\n";
    for (const auto& st : *body) stmt_source(st, os, indent + 1);
    os << pad << "}\n";
}

void expr_tree(const Expr& e, std::ostream& os, int indent) {
    std::string pad(indent * 2, ' ');
    if (const auto* i = std::get_if<IntLit>(&e.node)) {
        os << pad << "(int " << i->value << ")";
    } else if (const auto* v = std::get_if<VarRef>(&e.node)) {
        os << pad << "(var " << v->name << ")";
    } else {
        const auto& b = std::get<BinExpr>(e.node);
        os << pad << "(binop " << binop_symbol(b.op) << "\n";
        expr_tree(*b.lhs, os, indent + 1);
        os << "\n";
        expr_tree(*b.rhs, os, indent + 1);
        os << ")";
    }
}

void stmt_tree(const Stmt& s, std::ostream& os, int indent) {
    std::string pad(indent * 2, ' ');
    if (const auto* a = std::get_if<AssignStmt>(&s.node)) {
        os << pad << "(assign " << a->target << "\n";
        expr_tree(*a->value, os, indent + 1);
        os << ")";
        return;
    }
    const ExprPtr* cond;
    const std::vector<Stmt>* body;
    const char* kw;
    if (const auto* i = std::get_if<IfStmt>(&s.node)) {
        cond = &i->cond; body = &i->body; kw = "if";
    } else {
        const auto& w = std::get<WhileStmt>(s.node);
        cond = &w.cond; body = &w.body; kw = "while";
    }
    os << pad << "(" << kw << "\n";
    expr_tree(**cond, os, indent + 1);
    for (const auto& st : *body) {
        os << "\n";
        stmt_tree(st, os, indent + 1);
    }
    os << ")";
}

}  // namespace

std::string to_source(const Program& p) {
    std::ostringstream os;
    for (const auto& s : p.stmts) stmt_source(s, os, 0);
    return os.str();
}

std::string to_source(const Stmt& s) {
    std::ostringstream os;
    stmt_source(s, os, 0);
    return os.str();
}

std::string dump_tree(const Program& p) {
    std::ostringstream os;
    os << "(program";
    for (const auto& s : p.stmts) {
        os << "\n";
        stmt_tree(s, os, 1);
    }
    os << ")\n";
    return os.str();
}

}  // namespace ccx
