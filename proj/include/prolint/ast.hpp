#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "prolint/cst.hpp"
#include "prolint/optable.hpp"

namespace prolint {

enum class AstKind {
    program,
    rule,
    fact,
    directive,
    compound,
    atom,
    variable,
    integer,
    floating,
    string,
    infix,
    prefix,
    postfix,
    list,
    curly,
    dict,
};

enum class QuoteKind { double_quote, back_quote };

// Layout-free term tree.
//
// children by kind:
//   program   clauses
//   rule      head, then the flattened body subgoals
//   fact      head
//   directive goal
//   compound  arguments
//   infix     left, right        prefix/postfix: the operand
//   list      elements           (tail aside)
//   curly     inner term
//   dict      tag, then alternating key, value
//
// Numeric literals keep their verbatim digit text so reformatting never
// rewrites a radix or exponent form; strings keep the whole quoted token.
struct AstNode {
    AstKind kind = AstKind::atom;
    std::string name;            // atom text, variable name, functor, operator
    OpSpecifier spec = OpSpecifier::xfx;  // operator nodes
    QuoteKind quote = QuoteKind::double_quote;
    std::string text;            // literal digits (sign excluded) / quoted token
    bool negative = false;
    long long int_value = 0;
    double float_value = 0.0;
    std::vector<std::unique_ptr<AstNode>> children;
    std::unique_ptr<AstNode> tail;  // list tail; null means proper list

    AstNode* child(std::size_t i) const { return children[i].get(); }
};

using AstPtr = std::unique_ptr<AstNode>;

AstPtr make_ast(AstKind kind);
AstPtr make_atom(std::string name);
AstPtr make_variable(std::string name);
AstPtr make_integer(long long value);
AstPtr make_compound(std::string functor, std::vector<AstPtr> args);

bool ast_equal(const AstNode& a, const AstNode& b);
AstPtr ast_clone(const AstNode& node);

struct AstWithOrigin {
    AstPtr ast;
    std::unordered_map<const AstNode*, SourceSpan> origin;

    SourceSpan span_of(const AstNode& node) const {
        auto it = origin.find(&node);
        return it == origin.end() ? SourceSpan{} : it->second;
    }
};

// CST -> AST projection. Invalid clauses in the tree are skipped; layout is
// dropped; top-level ':-'/2 terms become rules with their conjunction body
// flattened into a subgoal list, ':-'/1 and '?-'/1 become directives, and
// everything else becomes a fact.
AstWithOrigin cst_to_ast(const CstNode& prolog_text, const DialectOptions& dialect);

// Compact term rendering, e.g.
//   rule(compound(atom(positive), [variable('X')]), [infix(>, xfx, ...)])
std::string ast_term_string(const AstNode& node);

// Indented rendering, one node per line, children indented two spaces.
std::string dump_ast(const AstNode& node);

}  // namespace prolint
