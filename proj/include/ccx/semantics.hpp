#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ccx/ast.hpp"
#include "ccx/diagnostic.hpp"

namespace ccx {

struct SymbolInfo {
    int first_line = 0;
    int species_ref = -1;  // filled in by codegen
};

/// All variables are global; declaration happens at first assignment.
/// Iteration order is first-assignment order, which fixes the emitted
/// species and observable order.
class SymbolTable {
public:
    /// Returns false if the name is already present.
    bool declare(const std::string& name, int line);
    bool contains(const std::string& name) const;
    SymbolInfo* find(const std::string& name);
    const SymbolInfo* find(const std::string& name) const;
    const std::vector<std::string>& names() const { return order_; }
    size_t size() const { return order_.size(); }

    bool operator==(const SymbolTable& other) const;

private:
    std::vector<std::string> order_;
    std::unordered_map<std::string, SymbolInfo> map_;
};

using AnalyzeResult = std::variant<SymbolTable, std::vector<Diagnostic>>;

/// Builds the symbol table and flags every use of a variable before its
/// first assignment. All errors are reported, in source order. The REPL
/// seeds the table with the variables of its live environment.
AnalyzeResult analyze(const Program& program, SymbolTable seed = {});

/// Rejects constructs the CRN backend cannot lower: '/', comparisons used
/// as expressions, 'if' and 'while'. Empty result means the program is
/// compilable. Only the compile path calls this; the interpreter executes
/// the full language.
std::vector<Diagnostic> check_supported(const Program& program);
std::vector<Diagnostic> check_supported(const Stmt& stmt);

}  // namespace ccx
