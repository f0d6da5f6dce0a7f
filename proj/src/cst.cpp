#include "prolint/cst.hpp"

#include <sstream>

namespace prolint {

const char* cst_label_name(CstLabel label) {
    switch (label) {
        case CstLabel::prolog_text: return "prolog_text";
        case CstLabel::clause: return "clause";
        case CstLabel::directive: return "directive";
        case CstLabel::invalid_clause: return "invalid_clause";
        case CstLabel::term: return "term";
        case CstLabel::compound_term: return "compound_term";
        case CstLabel::arg_list: return "arg_list";
        case CstLabel::list_term: return "list_term";
        case CstLabel::curly_term: return "curly_term";
        case CstLabel::dict_term: return "dict_term";
        case CstLabel::negative_number_term: return "negative_number_term";
        case CstLabel::operator_notation_term: return "operator_notation_term";
        case CstLabel::end_of_file: return "end_of_file";
    }
    return "?";
}

std::unique_ptr<CstNode> make_cst(CstLabel label, int priority) {
    auto node = std::make_unique<CstNode>();
    node->label = label;
    node->priority = priority;
    return node;
}

namespace {

void serialize_into(const CstNode& node, std::string& out) {
    for (const CstChild& child : node.children) {
        if (const Token* tok = std::get_if<Token>(&child)) {
            for (const LayoutItem& item : tok->layout_before) out += item.text;
            out += tok->text;
        } else {
            serialize_into(*std::get<std::unique_ptr<CstNode>>(child), out);
        }
    }
}

void dump_into(const CstNode& node, int depth, std::ostringstream& out) {
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << cst_label_name(node.label)
        << " (prio " << node.priority << ")\n";
    for (const CstChild& child : node.children) {
        if (const Token* tok = std::get_if<Token>(&child)) {
            out << std::string(static_cast<std::size_t>(depth + 1) * 2, ' ')
                << token_kind_name(tok->kind) << " \"" << tok->text << "\"\n";
        } else {
            dump_into(*std::get<std::unique_ptr<CstNode>>(child), depth + 1, out);
        }
    }
}

bool span_of(const CstNode& node, SourceSpan& out, bool& any) {
    for (const CstChild& child : node.children) {
        if (const Token* tok = std::get_if<Token>(&child)) {
            out = any ? join_spans(out, tok->span) : tok->span;
            any = true;
        } else {
            span_of(*std::get<std::unique_ptr<CstNode>>(child), out, any);
        }
    }
    return any;
}

}  // namespace

std::string serialize_cst(const CstNode& node) {
    std::string out;
    serialize_into(node, out);
    return out;
}

bool cst_span(const CstNode& node, SourceSpan& out) {
    bool any = false;
    return span_of(node, out, any);
}

std::string dump_cst(const CstNode& node) {
    std::ostringstream out;
    dump_into(node, 0, out);
    return out.str();
}

}  // namespace prolint
