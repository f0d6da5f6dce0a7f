#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prolint/ast.hpp"
#include "prolint/cst.hpp"
#include "prolint/dialect.hpp"
#include "prolint/optable.hpp"

namespace prolint {

// Concrete layout settings for the AST writer. These mirror the checkable
// style options; the checker's check/infer wrapper lives in style.hpp.
struct SerializeOptions {
    int indent_width = 4;   // spaces per level
    bool indent_with_tab = false;
    bool space_after_arglist_comma = true;
    bool newline_after_clause = true;
    bool newline_after_rule_op = true;
    bool newline_after_subgoal = true;
    bool indent_between_repeat_cut = false;
};

// Renders the AST as source text. Operator notation is used for operators
// present in `table`; anything else falls back to functional notation.
// Parentheses are emitted only where the priority bounds require them.
std::string serialize_ast(const AstNode& ast, const SerializeOptions& options,
                          const OperatorTable& table, const DialectOptions& dialect);

// serialize + reparse: the CST of the rendered text. Throws std::logic_error
// if the rendered text does not parse back (a writer bug by construction).
std::unique_ptr<CstNode> ast_to_cst(const AstNode& ast, const SerializeOptions& options,
                                    const OperatorTable& table, const DialectOptions& dialect);

// Atom rendering shared with diagnostics: plain when the text lexes as a
// single name token, otherwise single-quoted with escapes.
std::string quote_atom(const std::string& name);

// Whole-file reformat: parse, project to AST, rewrite. Comments and blank
// lines do not survive the AST projection. Clauses are re-rendered with the
// operator table as it stood when they were parsed, so mid-file op
// directives round-trip. Parse or lex failures leave `ok` false.
struct FormatResult {
    std::string text;
    std::string error;  // first lex/parse error when !ok
    bool ok = false;
};
FormatResult format_source(std::string_view source, const SerializeOptions& options,
                           const OperatorTable& base, const DialectOptions& dialect);

// op(P, Spec, Names) request carried by a directive clause, when its
// arguments are literal.
struct AstOpDirective {
    int priority;
    OpSpecifier spec;
    std::vector<std::string> names;
};
std::optional<AstOpDirective> ast_op_directive(const AstNode& clause);

}  // namespace prolint
