#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prolint/optable.hpp"
#include "prolint/token.hpp"

namespace prolint {

enum class CstLabel {
    prolog_text,
    clause,
    directive,
    invalid_clause,  // raw tokens of a clause that failed to parse
    term,            // single-token primary or parenthesized term
    compound_term,
    arg_list,
    list_term,
    curly_term,
    dict_term,
    negative_number_term,
    operator_notation_term,
    end_of_file,  // zero-width carrier for trailing layout
};

const char* cst_label_name(CstLabel label);

struct CstNode;
using CstChild = std::variant<Token, std::unique_ptr<CstNode>>;

// Grammar-shaped tree. Leaves are tokens; in-order concatenation of leaf
// layout and text reproduces the consumed source bytes exactly.
struct CstNode {
    CstLabel label = CstLabel::term;
    int priority = 0;  // priority at which the term was accepted
    std::optional<OpSpecifier> op_spec;  // operator_notation_term only
    std::vector<CstChild> children;

    void add(Token tok) { children.emplace_back(std::move(tok)); }
    void add(std::unique_ptr<CstNode> node) { children.emplace_back(std::move(node)); }
};

std::unique_ptr<CstNode> make_cst(CstLabel label, int priority = 0);

// Byte-exact serialization of the subtree.
std::string serialize_cst(const CstNode& node);

// Span covering the first through last token of the subtree, layout
// excluded. Returns false when the subtree holds no tokens.
bool cst_span(const CstNode& node, SourceSpan& out);

// Indented structural rendering for debugging (one node per line, children
// indented two spaces, tokens shown with kind and text).
std::string dump_cst(const CstNode& node);

}  // namespace prolint
