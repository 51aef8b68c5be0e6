#pragma once

#include <string>
#include <vector>

namespace ccx {

/// A user-facing error carrying the source line it was reported at.
/// The message holds the exact text printed to the error stream.
struct Diagnostic {
    int line = 0;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

std::string syntax_error_message(int line);

Diagnostic syntax_error(int line);
Diagnostic undeclared_variable(const std::string& name, int line);
Diagnostic unsupported_construct(const std::string& what, int line);

}  // namespace ccx
