#include "ccx/interpreter.hpp"

namespace ccx {

namespace {

struct EvalError {
    Diagnostic diag;
};

class Evaluator {
public:
    explicit Evaluator(Env& env) : env_(env) {}

    void run(const std::vector<Stmt>& stmts) {
        for (const auto& s : stmts) exec(s);
    }

    void exec(const Stmt& s) {
        tick(s.line);
        if (const auto* a = std::get_if<AssignStmt>(&s.node)) {
            env_[a->target] = eval(*a->value);
        } else if (const auto* i = std::get_if<IfStmt>(&s.node)) {
            if (eval(*i->cond) != 0) run(i->body);
        } else {
            const auto& w = std::get<WhileStmt>(s.node);
            while (eval(*w.cond) != 0) {
                run(w.body);
                tick(s.line);
            }
        }
    }

private:
    Env& env_;
    long long steps_ = 0;

    void tick(int line) {
        if (++steps_ > kInterpreterStepLimit)
            throw EvalError{{line, "step limit exceeded at line " + std::to_string(line)}};
    }

    long long eval(const Expr& e) {
        if (const auto* i = std::get_if<IntLit>(&e.node)) return i->value;
        if (const auto* v = std::get_if<VarRef>(&e.node)) {
            auto it = env_.find(v->name);
            if (it == env_.end()) throw EvalError{undeclared_variable(v->name, e.line)};
            return it->second;
        }
        const auto& b = std::get<BinExpr>(e.node);
        long long l = eval(*b.lhs);
        long long r = eval(*b.rhs);
        switch (b.op) {
            case BinOp::Add: return l + r;
            case BinOp::Sub: return l > r ? l - r : 0;  // monus
            case BinOp::Mul: return l * r;
            case BinOp::Div:
                if (r == 0)
                    throw EvalError{{e.line, "division by zero at line " + std::to_string(e.line)}};
                return l / r;
            case BinOp::Lt: return l < r ? 1 : 0;
            case BinOp::Gt: return l > r ? 1 : 0;
            case BinOp::Le: return l <= r ? 1 : 0;
            case BinOp::Ge: return l >= r ? 1 : 0;
            case BinOp::Eq: return l == r ? 1 : 0;
            case BinOp::Ne: return l != r ? 1 : 0;
        }
        return 0;
    }
};

}  // namespace

InterpretResult interpret(const Program& program) {
    Env env;
    try {
        Evaluator(env).run(program.stmts);
    } catch (const EvalError& e) {
        return e.diag;
    }
    return env;
}

std::variant<std::monostate, Diagnostic> interpret_stmt(const Stmt& stmt, Env& env) {
    try {
        Evaluator ev(env);
        ev.exec(stmt);
    } catch (const EvalError& e) {
        return e.diag;
    }
    return std::monostate{};
}

}  // namespace ccx
