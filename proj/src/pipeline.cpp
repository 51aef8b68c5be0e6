#include "ccx/pipeline.hpp"

#include "ccx/parser.hpp"

namespace ccx {

std::variant<Program, std::vector<Diagnostic>> parse_and_analyze(std::string_view source) {
    ParseResult parsed = parse_source(source);
    if (auto* diag = std::get_if<Diagnostic>(&parsed))
        return std::vector<Diagnostic>{*diag};
    Program program = std::move(std::get<Program>(parsed));
    AnalyzeResult analyzed = analyze(program);
    if (auto* diags = std::get_if<std::vector<Diagnostic>>(&analyzed)) return *diags;
    return program;
}

CompileSourceResult compile_source(std::string_view source, const RateConfig& rates) {
    auto front = parse_and_analyze(source);
    if (auto* diags = std::get_if<std::vector<Diagnostic>>(&front)) return *diags;
    Program program = std::move(std::get<Program>(front));

    std::vector<Diagnostic> unsupported = check_supported(program);
    if (!unsupported.empty()) return unsupported;

    AnalyzeResult analyzed = analyze(program);
    CompiledProgram out;
    out.code = compile_program(program, std::get<SymbolTable>(analyzed), rates);
    out.ast = std::move(program);
    return out;
}

std::variant<Env, std::vector<Diagnostic>> interpret_source(std::string_view source) {
    auto front = parse_and_analyze(source);
    if (auto* diags = std::get_if<std::vector<Diagnostic>>(&front)) return *diags;
    InterpretResult result = interpret(std::get<Program>(front));
    if (auto* diag = std::get_if<Diagnostic>(&result))
        return std::vector<Diagnostic>{*diag};
    return std::move(std::get<Env>(result));
}

}  // namespace ccx
