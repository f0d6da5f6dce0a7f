#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prolint/dialect.hpp"
#include "prolint/token.hpp"

namespace prolint {

struct LexError {
    std::string message;
    SourceSpan span;
};

// Token stream plus the layout that follows the last token. Concatenating
// every token's layout_before and text, then `trailing`, reproduces the
// input byte-for-byte.
struct LexResult {
    std::vector<Token> tokens;
    std::vector<LayoutItem> trailing;
    std::optional<LexError> error;

    bool ok() const { return !error.has_value(); }
};

LexResult tokenize(std::string_view source, const DialectOptions& dialect);

// Re-concatenates layout and token texts; inverse of tokenize on accepted
// input.
std::string reconstruct(const LexResult& lexed);

enum class VariableClass { anonymous, named };

// Precondition: tok.kind == variable. Throws std::invalid_argument otherwise.
VariableClass classify_variable(const Token& tok);

struct IndentRun {
    LayoutKind kind;  // space or tab
    int count;
};

// Leading whitespace composition of one physical line, empty when the line
// starts with a non-layout character or is out of range.
std::vector<IndentRun> layout_of_line(const LexResult& lexed, int line);

// True when `text` is a syntactically valid unquoted name token on its own
// (used by the serializer to decide quoting).
bool is_plain_name_token(std::string_view text);

// Decodes the logical text of a quoted token (single, double or back
// quoted): strips the quotes and resolves escapes. Returns nullopt when an
// escape cannot be resolved under the dialect.
std::optional<std::string> unquote_token_text(std::string_view text, const DialectOptions& dialect);

// Logical atom text of a name token: quoted atoms are unescaped, everything
// else is the verbatim text.
std::string name_token_value(const Token& tok, const DialectOptions& dialect);

// Numeric value of an integer or char_code_constant token (sign excluded).
long long integer_token_value(const Token& tok, const DialectOptions& dialect);

}  // namespace prolint
