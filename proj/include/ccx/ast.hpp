#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace ccx {

enum class BinOp { Add, Sub, Mul, Div, Lt, Gt, Le, Ge, Eq, Ne };

/// Symbol as written in source ("+", "<=", ...).
const char* binop_symbol(BinOp op);
bool is_comparison(BinOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct IntLit {
    long long value;  // non-negative by construction
};

struct VarRef {
    std::string name;
};

struct BinExpr {
    BinOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Expr {
    int line;
    std::variant<IntLit, VarRef, BinExpr> node;
};

struct Stmt;

struct AssignStmt {
    std::string target;
    ExprPtr value;
};

struct IfStmt {
    ExprPtr cond;
    std::vector<Stmt> body;
};

struct WhileStmt {
    ExprPtr cond;
    std::vector<Stmt> body;
};

struct Stmt {
    int line;
    std::variant<AssignStmt, IfStmt, WhileStmt> node;
};

struct Program {
    std::vector<Stmt> stmts;
};

ExprPtr make_int(int line, long long value);
ExprPtr make_var(int line, std::string name);
ExprPtr make_binop(int line, BinOp op, ExprPtr lhs, ExprPtr rhs);

ExprPtr clone(const Expr& e);
Stmt clone(const Stmt& s);
Program clone(const Program& p);

/// Structural equality; source lines are ignored.
bool same_shape(const Expr& a, const Expr& b);
bool same_shape(const Stmt& a, const Stmt& b);
bool same_shape(const Program& a, const Program& b);

/// Renders the program back to parseable source. Expressions come out fully
/// parenthesized, so one print/parse round trip is a fixed point.
std::string to_source(const Program& p);
std::string to_source(const Stmt& s);

/// Parenthesized tree listing, one node per line, two-space indentation
/// (the `--emit ast` format).
std::string dump_tree(const Program& p);

}  // namespace ccx
