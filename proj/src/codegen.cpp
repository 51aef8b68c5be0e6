#include "ccx/codegen.hpp"

#include <optional>
#include <stdexcept>

namespace ccx {

namespace {

// Operand/result slots per expression depth. Depth 0 is the register file
// from the paper (_localx/_localy for operands, _localz for the running
// result); deeper nesting spills into the _tmp pool. The subtraction temp is
// a dedicated slot per depth: its annihilation partner reaction persists in
// the CRN, so the slot must never hold anything but a subtrahend.
struct SlotNames {
    std::string op_left, op_right, result, sub_temp;
};

SlotNames slot_names(int depth) {
    if (depth == 0) return {"_localx", "_localy", "_localz", "_tmp0"};
    int base = 4 * depth;
    auto tmp = [](int n) { return "_tmp" + std::to_string(n); };
    return {tmp(base - 3), tmp(base - 2), tmp(base - 1), tmp(base)};
}

}  // namespace

struct CodegenSession::Impl {
    RateConfig rates;
    Crn crn;
    TemplateBuilder builder;
    SymbolTable symtab;
    std::optional<ModuleInstance> last_module;
    bool triggered = false;

    explicit Impl(RateConfig r) : rates(r), builder(crn) {}

    int var_species(const std::string& name, int line) {
        symtab.declare(name, line);
        SymbolInfo* info = symtab.find(name);
        if (info->species_ref >= 0) return info->species_ref;
        int id = crn.add_species(name, 0, SpeciesKind::UserVariable);
        info->species_ref = id;
        crn.observables.push_back(id);
        return id;
    }

    int register_species(const std::string& name) {
        int id = crn.find_species(name);
        if (id >= 0) return id;
        return crn.add_species(name, 0, SpeciesKind::Register);
    }

    /// Registers a freshly created top-level module in the statement chain.
    void sequence(const ModuleInstance& module) {
        if (last_module) {
            builder.chain(*last_module, module);
        } else if (!triggered) {
            // Program trigger: the very first module starts armed.
            crn.species[module.start].initial_count = 1;
            triggered = true;
        }
        last_module = module;
    }

    void emit_clear(int target) { sequence(builder.instantiate_clear(target)); }
    void emit_copy(int source, int dest) { sequence(builder.instantiate_copy(source, dest)); }
    void emit_subtract(int target, int temp) { sequence(builder.instantiate_subtract(target, temp)); }
    void emit_multiply(int a, int b, int dest) { sequence(builder.instantiate_multiply(a, b, dest)); }

    int eval(const Expr& expr, int depth) {
        if (const auto* lit = std::get_if<IntLit>(&expr.node))
            return const_species(crn, lit->value);
        if (const auto* var = std::get_if<VarRef>(&expr.node))
            return var_species(var->name, expr.line);

        // Both children evaluate at depth+1 and would reuse the same slots,
        // so the left value is staged into this depth's slots before the
        // right child is lowered.
        const auto& bin = std::get<BinExpr>(expr.node);
        SlotNames slots = slot_names(depth);
        int result = register_species(slots.result);
        switch (bin.op) {
            case BinOp::Add: {
                int lhs = eval(*bin.lhs, depth + 1);
                emit_clear(result);
                emit_copy(lhs, result);
                int rhs = eval(*bin.rhs, depth + 1);
                emit_copy(rhs, result);
                break;
            }
            case BinOp::Sub: {
                // The result register is cleared before the subtrahend
                // arrives: the annihilation pair reaction is permanent, and
                // stale minuend residue would otherwise eat into the
                // incoming temp copy.
                int temp = register_species(slots.sub_temp);
                int lhs = eval(*bin.lhs, depth + 1);
                emit_clear(result);
                emit_copy(lhs, result);
                int rhs = eval(*bin.rhs, depth + 1);
                emit_clear(temp);
                emit_copy(rhs, temp);
                emit_subtract(result, temp);
                emit_clear(temp);  // destroys the residue when rhs > lhs
                break;
            }
            case BinOp::Mul: {
                int ax = register_species(slots.op_left);
                int bx = register_species(slots.op_right);
                int lhs = eval(*bin.lhs, depth + 1);
                emit_clear(ax);
                emit_copy(lhs, ax);
                int rhs = eval(*bin.rhs, depth + 1);
                emit_clear(bx);
                emit_copy(rhs, bx);
                emit_clear(result);
                emit_multiply(ax, bx, result);
                break;
            }
            default:
                throw std::logic_error("codegen reached an unsupported operator");
        }
        return result;
    }

    void lower_assign(const Stmt& stmt) {
        const auto& assign = std::get<AssignStmt>(stmt.node);
        const Expr& rhs = *assign.value;

        // x = 0 is a bare clear.
        if (const auto* lit = std::get_if<IntLit>(&rhs.node); lit && lit->value == 0) {
            int target = var_species(assign.target, stmt.line);
            emit_clear(target);
            return;
        }

        // Self-assignment must stage through a register: clearing the target
        // first would destroy the value the copy is about to read.
        const auto* var = std::get_if<VarRef>(&rhs.node);
        bool self = var && var->name == assign.target;

        if (!var && !std::holds_alternative<IntLit>(rhs.node)) {
            // Compound right-hand side: evaluate first (the target may appear
            // as an operand), then clear and copy.
            int value = eval(rhs, 0);
            int target = var_species(assign.target, stmt.line);
            emit_clear(target);
            emit_copy(value, target);
            return;
        }

        int source = self ? -1 : eval(rhs, 0);
        if (self) {
            int staging = register_species(slot_names(0).result);
            int target = var_species(assign.target, stmt.line);
            emit_clear(staging);
            emit_copy(target, staging);
            emit_clear(target);
            emit_copy(staging, target);
            return;
        }
        int target = var_species(assign.target, stmt.line);
        emit_clear(target);
        emit_copy(source, target);
    }
};

CodegenSession::CodegenSession(RateConfig rates) : impl_(std::make_unique<Impl>(rates)) {}
CodegenSession::~CodegenSession() = default;
CodegenSession::CodegenSession(CodegenSession&&) noexcept = default;
CodegenSession& CodegenSession::operator=(CodegenSession&&) noexcept = default;

std::pair<int, int> CodegenSession::add_stmt(const Stmt& stmt) {
    if (!std::holds_alternative<AssignStmt>(stmt.node))
        throw std::logic_error("codegen accepts only assignment statements");
    int first = static_cast<int>(impl_->crn.reactions.size());
    impl_->lower_assign(stmt);
    return {first, static_cast<int>(impl_->crn.reactions.size())};
}

const Crn& CodegenSession::crn() const { return impl_->crn; }
const SymbolTable& CodegenSession::symtab() const { return impl_->symtab; }

CompileResult CodegenSession::take_result() {
    CompileResult result;
    result.crn = std::move(impl_->crn);
    result.modules = impl_->builder.instances();
    result.symtab = std::move(impl_->symtab);
    return result;
}

CompileResult compile_program(const Program& program, const SymbolTable& symtab,
                              const RateConfig& rates) {
    CodegenSession session(rates);
    (void)symtab;  // rebuilt during lowering; declaration order is identical
    for (const auto& stmt : program.stmts) session.add_stmt(stmt);
    return session.take_result();
}

}  // namespace ccx
