#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ccx/ast.hpp"
#include "ccx/crn.hpp"
#include "ccx/semantics.hpp"
#include "ccx/templates.hpp"

namespace ccx {

/// Compilation output: the CRN plus the instantiated modules (for structural
/// assertions and tracing).
struct CompileResult {
    Crn crn;
    std::vector<ModuleInstance> modules;  // all instances, creation order
    SymbolTable symtab;                   // species_ref filled in
};

/// Incremental code generator; one session per compilation. Statements are
/// lowered in order and chained so each one's modules run after the previous
/// one's complete. The first module emitted for the whole session carries the
/// program trigger (start count 1).
class CodegenSession {
public:
    explicit CodegenSession(RateConfig rates = {});
    ~CodegenSession();
    CodegenSession(CodegenSession&&) noexcept;
    CodegenSession& operator=(CodegenSession&&) noexcept;

    /// Lowers one assignment statement. The statement must already have
    /// passed analyze and check_supported. Returns the range of reaction ids
    /// added for it (REPL listing support).
    std::pair<int, int> add_stmt(const Stmt& stmt);

    const Crn& crn() const;
    const SymbolTable& symtab() const;
    CompileResult take_result();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Lowers a whole checked program. Observables are exactly the user
/// variables, in first-assignment order.
CompileResult compile_program(const Program& program, const SymbolTable& symtab,
                              const RateConfig& rates = {});

}  // namespace ccx
