#pragma once

#include <string>
#include <unordered_map>
#include <variant>

#include "ccx/ast.hpp"
#include "ccx/diagnostic.hpp"

namespace ccx {

/// Variable environment over non-negative integers.
using Env = std::unordered_map<std::string, long long>;

using InterpretResult = std::variant<Env, Diagnostic>;

inline constexpr long long kInterpreterStepLimit = 10'000'000;

/// Reference big-step evaluator and differential-testing oracle. Subtraction
/// is monus (max(a-b, 0)), matching the annihilation semantics of the CRN
/// backend; '/' is floor division; comparisons yield 1/0; 'if'/'while' test
/// condition != 0. The step limit guards non-terminating loops.
InterpretResult interpret(const Program& program);

/// Executes a single statement against an existing environment (REPL path).
/// Returns the diagnostic on failure; env is updated in place on success.
std::variant<std::monostate, Diagnostic> interpret_stmt(const Stmt& stmt, Env& env);

}  // namespace ccx
