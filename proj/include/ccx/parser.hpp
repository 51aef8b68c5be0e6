#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ccx/ast.hpp"
#include "ccx/diagnostic.hpp"
#include "ccx/token.hpp"

namespace ccx {

using ParseResult = std::variant<Program, Diagnostic>;

/// Parses a complete token stream (must end with end-of-input) into a
/// Program. Multiplicative operators bind tighter than additive, which bind
/// tighter than comparisons; all operators are left-associative. The first
/// violation stops parsing; a missing ';' is reported at the line where the
/// statement should have ended.
ParseResult parse(const std::vector<Token>& tokens);

/// tokenize + parse in one step.
ParseResult parse_source(std::string_view source, int first_line = 1);

/// Line-at-a-time parser driving the interactive mode. Lines accumulate
/// until the buffered text forms one or more complete statements (all braces
/// closed, last token ';' or '}'); a blank line forces the buffer to be
/// parsed as-is, surfacing errors for incomplete input.
class ReplParser {
public:
    struct NeedMore {};
    using FeedResult = std::variant<NeedMore, std::vector<Stmt>, Diagnostic>;

    FeedResult feed(std::string_view line);

    int current_line() const { return next_line_; }
    bool pending() const { return !buffer_.empty(); }

private:
    std::string buffer_;
    int buffer_first_line_ = 1;
    int next_line_ = 1;
};

}  // namespace ccx
