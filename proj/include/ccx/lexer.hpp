#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "ccx/diagnostic.hpp"
#include "ccx/token.hpp"

namespace ccx {

using TokenizeResult = std::variant<std::vector<Token>, Diagnostic>;

/// Splits source text into tokens (maximal munch). The returned list always
/// ends with an end-of-input token. Identifiers match [a-z][a-z0-9]*,
/// integer literals are unsigned decimal digit strings. Any character that
/// starts no valid token (a decimal point, an uppercase letter, ...) yields
/// a syntax Diagnostic carrying the current line.
TokenizeResult tokenize(std::string_view source, int first_line = 1);

}  // namespace ccx
