#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prolint/cst.hpp"
#include "prolint/lexer.hpp"
#include "prolint/optable.hpp"

namespace prolint {

struct ParseError {
    std::string message;
    SourceSpan span;
};

struct ParseOutcome {
    std::unique_ptr<CstNode> cst;  // label prolog_text
    std::vector<OpDef> deduced_ops;
    OperatorTable table_final;
    std::vector<ParseError> errors;  // one per unparsable clause
    bool timed_out = false;

    bool ok() const { return errors.empty() && !timed_out; }
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

// Parses a clause sequence, applying op/3 directives mid-stream. Each
// syntactically invalid clause is reported once and skipped to its end
// token; the raw tokens stay in the tree so serialization remains
// byte-exact. When dialect.deduce_operators is set, an otherwise
// unparsable clause may be retried under a hypothesized operator
// definition (first solution only), reported in deduced_ops.
ParseOutcome parse_program(const LexResult& lexed, const OperatorTable& table,
                           const DialectOptions& dialect, Deadline deadline = std::nullopt);

// Single-term entry point: parses one term of priority <= max_priority
// starting at tokens[0]. On success `consumed` holds the number of tokens
// used.
struct TermResult {
    std::unique_ptr<CstNode> cst;
    std::size_t consumed = 0;
};
std::optional<TermResult> parse_term(std::span<const Token> tokens, int max_priority,
                                     const OperatorTable& table, const DialectOptions& dialect,
                                     ParseError& error);

}  // namespace prolint
