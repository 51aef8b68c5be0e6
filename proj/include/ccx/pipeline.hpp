#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "ccx/ast.hpp"
#include "ccx/codegen.hpp"
#include "ccx/diagnostic.hpp"
#include "ccx/interpreter.hpp"
#include "ccx/semantics.hpp"

namespace ccx {

struct CompiledProgram {
    Program ast;
    CompileResult code;
};

using CompileSourceResult = std::variant<CompiledProgram, std::vector<Diagnostic>>;

/// tokenize -> parse -> analyze -> check_supported -> compile_program.
CompileSourceResult compile_source(std::string_view source, const RateConfig& rates = {});

/// tokenize -> parse -> analyze -> interpret (full language).
std::variant<Env, std::vector<Diagnostic>> interpret_source(std::string_view source);

/// tokenize -> parse -> analyze; shared front half of both paths.
std::variant<Program, std::vector<Diagnostic>> parse_and_analyze(std::string_view source);

}  // namespace ccx
