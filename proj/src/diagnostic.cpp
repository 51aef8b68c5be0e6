#include "ccx/diagnostic.hpp"

namespace ccx {

std::string syntax_error_message(int line) {
    return "syntax error at/near line " + std::to_string(line);
}

Diagnostic syntax_error(int line) {
    return {line, syntax_error_message(line)};
}

Diagnostic undeclared_variable(const std::string& name, int line) {
    return {line, "undeclared variable '" + name + "' at line " + std::to_string(line)};
}

Diagnostic unsupported_construct(const std::string& what, int line) {
    return {line, "unsupported construct '" + what + "' at line " + std::to_string(line)};
}

}  // namespace ccx
