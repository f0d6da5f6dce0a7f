#include "prolint/ast.hpp"

#include <algorithm>
#include <sstream>

#include "prolint/lexer.hpp"

namespace prolint {

AstPtr make_ast(AstKind kind) {
    auto node = std::make_unique<AstNode>();
    node->kind = kind;
    return node;
}

AstPtr make_atom(std::string name) {
    auto node = make_ast(AstKind::atom);
    node->name = std::move(name);
    return node;
}

AstPtr make_variable(std::string name) {
    auto node = make_ast(AstKind::variable);
    node->name = std::move(name);
    return node;
}

AstPtr make_integer(long long value) {
    auto node = make_ast(AstKind::integer);
    node->negative = value < 0;
    node->int_value = value < 0 ? -value : value;
    node->text = std::to_string(node->int_value);
    return node;
}

AstPtr make_compound(std::string functor, std::vector<AstPtr> args) {
    auto node = make_ast(AstKind::compound);
    node->name = std::move(functor);
    node->children = std::move(args);
    return node;
}

bool ast_equal(const AstNode& a, const AstNode& b) {
    if (a.kind != b.kind || a.name != b.name || a.negative != b.negative) return false;
    switch (a.kind) {
        case AstKind::infix:
        case AstKind::prefix:
        case AstKind::postfix:
            if (a.spec != b.spec) return false;
            break;
        case AstKind::integer:
        case AstKind::floating:
        case AstKind::string:
            if (a.text != b.text) return false;
            if (a.kind == AstKind::string && a.quote != b.quote) return false;
            break;
        default:
            break;
    }
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!ast_equal(*a.children[i], *b.children[i])) return false;
    if ((a.tail == nullptr) != (b.tail == nullptr)) return false;
    if (a.tail != nullptr && !ast_equal(*a.tail, *b.tail)) return false;
    return true;
}

AstPtr ast_clone(const AstNode& node) {
    auto copy = std::make_unique<AstNode>();
    copy->kind = node.kind;
    copy->name = node.name;
    copy->spec = node.spec;
    copy->quote = node.quote;
    copy->text = node.text;
    copy->negative = node.negative;
    copy->int_value = node.int_value;
    copy->float_value = node.float_value;
    for (const auto& child : node.children) copy->children.push_back(ast_clone(*child));
    if (node.tail) copy->tail = ast_clone(*node.tail);
    return copy;
}

namespace {

class AstBuilder {
public:
    AstBuilder(const DialectOptions& dialect, AstWithOrigin& out)
        : dialect_(dialect), out_(out) {}

    AstPtr build_program(const CstNode& text) {
        auto program = make_ast(AstKind::program);
        for (const CstChild& child : text.children) {
            auto* p = std::get_if<std::unique_ptr<CstNode>>(&child);
            if (p == nullptr) continue;
            const CstNode& node = **p;
            if (node.label == CstLabel::clause || node.label == CstLabel::directive)
                program->children.push_back(build_clause(node));
        }
        record(*program, text);
        return program;
    }

private:
    const DialectOptions& dialect_;
    AstWithOrigin& out_;

    void record(const AstNode& ast, const CstNode& cst) {
        SourceSpan span;
        if (cst_span(cst, span)) out_.origin[&ast] = span;
    }

    static const CstNode* node_at(const CstNode& parent, std::size_t i) {
        if (i >= parent.children.size()) return nullptr;
        auto* p = std::get_if<std::unique_ptr<CstNode>>(&parent.children[i]);
        return p ? p->get() : nullptr;
    }

    static const Token* token_at(const CstNode& parent, std::size_t i) {
        if (i >= parent.children.size()) return nullptr;
        return std::get_if<Token>(&parent.children[i]);
    }

    AstPtr build_clause(const CstNode& clause) {
        const CstNode* term = node_at(clause, 0);
        AstPtr result;
        if (clause.label == CstLabel::directive) {
            result = make_ast(AstKind::directive);
            const CstNode* goal = node_at(*term, 1);
            result->children.push_back(build_term(*goal));
        } else if (is_rule_term(*term)) {
            result = make_ast(AstKind::rule);
            result->children.push_back(build_term(*node_at(*term, 0)));
            flatten_body(*node_at(*term, 2), result->children);
        } else {
            result = make_ast(AstKind::fact);
            result->children.push_back(build_term(*term));
        }
        record(*result, clause);
        return result;
    }

    static bool is_rule_term(const CstNode& term) {
        if (term.label != CstLabel::operator_notation_term || term.children.size() != 3)
            return false;
        const Token* op = std::get_if<Token>(&term.children[1]);
        return op != nullptr && op->kind == TokenKind::name && op->text == ":-";
    }

    // Only the top-level right-nested ','/2 chain becomes the subgoal list;
    // conjunctions nested in parentheses stay as infix nodes.
    void flatten_body(const CstNode& body, std::vector<AstPtr>& out) {
        if (body.label == CstLabel::operator_notation_term && body.children.size() == 3) {
            const Token* op = std::get_if<Token>(&body.children[1]);
            if (op != nullptr && op->kind == TokenKind::comma) {
                flatten_body(*node_at(body, 0), out);
                flatten_body(*node_at(body, 2), out);
                return;
            }
        }
        out.push_back(build_term(body));
    }

    AstPtr build_term(const CstNode& term) {
        AstPtr result;
        switch (term.label) {
            case CstLabel::term:
                result = build_plain(term);
                break;
            case CstLabel::compound_term:
                result = build_compound(term);
                break;
            case CstLabel::arg_list:
                result = nullptr;  // handled by build_compound
                break;
            case CstLabel::list_term:
                result = build_list(term);
                break;
            case CstLabel::curly_term:
                result = build_curly(term);
                break;
            case CstLabel::dict_term:
                result = build_dict(term);
                break;
            case CstLabel::negative_number_term:
                result = build_negative_number(term);
                break;
            case CstLabel::operator_notation_term:
                result = build_operator(term);
                break;
            default:
                result = make_atom("");
                break;
        }
        record(*result, term);
        return result;
    }

    AstPtr build_plain(const CstNode& term) {
        if (term.children.size() == 3) {  // ( inner )
            const CstNode* inner = node_at(term, 1);
            return build_term(*inner);
        }
        const Token* tok = token_at(term, 0);
        return build_token(*tok);
    }

    AstPtr build_token(const Token& tok) {
        switch (tok.kind) {
            case TokenKind::name:
                return make_atom(name_token_value(tok, dialect_));
            case TokenKind::variable:
                return make_variable(tok.text);
            case TokenKind::integer:
            case TokenKind::char_code_constant: {
                auto node = make_ast(AstKind::integer);
                node->text = tok.text;
                node->int_value = integer_token_value(tok, dialect_);
                return node;
            }
            case TokenKind::floating: {
                auto node = make_ast(AstKind::floating);
                node->text = tok.text;
                std::string digits = tok.text;
                digits.erase(std::remove(digits.begin(), digits.end(), '_'), digits.end());
                node->float_value = std::stod(digits);
                return node;
            }
            case TokenKind::double_quoted:
            case TokenKind::back_quoted: {
                auto node = make_ast(AstKind::string);
                node->text = tok.text;
                node->quote = tok.kind == TokenKind::double_quoted ? QuoteKind::double_quote
                                                                   : QuoteKind::back_quote;
                return node;
            }
            default:
                return make_atom(tok.text);
        }
    }

    AstPtr build_compound(const CstNode& term) {
        auto node = make_ast(AstKind::compound);
        if (const Token* functor = token_at(term, 0)) {
            node->name = name_token_value(*functor, dialect_);
        } else if (const CstNode* f = node_at(term, 0)) {
            node->name = f->label == CstLabel::list_term ? "[]" : "{}";
        }
        for (const CstChild& child : term.children) {
            auto* p = std::get_if<std::unique_ptr<CstNode>>(&child);
            if (p == nullptr) continue;
            const CstNode& sub = **p;
            if (sub.label != CstLabel::arg_list) continue;
            for (const CstChild& argc : sub.children) {
                if (auto* a = std::get_if<std::unique_ptr<CstNode>>(&argc))
                    node->children.push_back(build_term(**a));
            }
        }
        return node;
    }

    AstPtr build_list(const CstNode& term) {
        if (term.children.size() == 2) return make_atom("[]");
        auto node = make_ast(AstKind::list);
        bool after_bar = false;
        for (const CstChild& child : term.children) {
            if (const Token* tok = std::get_if<Token>(&child)) {
                if (tok->kind == TokenKind::bar) after_bar = true;
                continue;
            }
            const CstNode& sub = *std::get<std::unique_ptr<CstNode>>(child);
            if (after_bar)
                node->tail = build_term(sub);
            else
                node->children.push_back(build_term(sub));
        }
        return node;
    }

    AstPtr build_curly(const CstNode& term) {
        if (term.children.size() == 2) return make_atom("{}");
        auto node = make_ast(AstKind::curly);
        node->children.push_back(build_term(*node_at(term, 1)));
        return node;
    }

    AstPtr build_dict(const CstNode& term) {
        auto node = make_ast(AstKind::dict);
        const Token* tag = token_at(term, 0);
        node->children.push_back(build_token(*tag));
        // children: tag, dict_open, then (key, ':', value, ',')* close
        std::size_t i = 2;
        while (i < term.children.size()) {
            if (const Token* tok = token_at(term, i)) {
                if (tok->kind == TokenKind::name && tok->text == ":") {
                    ++i;
                    continue;
                }
                if (tok->kind == TokenKind::comma || tok->kind == TokenKind::close_curly) {
                    ++i;
                    continue;
                }
                node->children.push_back(build_token(*tok));  // key
                ++i;
                continue;
            }
            node->children.push_back(build_term(*node_at(term, i)));  // value
            ++i;
        }
        return node;
    }

    AstPtr build_negative_number(const CstNode& term) {
        const Token* numeral = token_at(term, 1);
        auto node = build_token(*numeral);
        node->negative = true;
        return node;
    }

    AstPtr build_operator(const CstNode& term) {
        OpSpecifier spec = term.op_spec.value_or(OpSpecifier::xfx);
        if (term.children.size() == 3 && std::holds_alternative<Token>(term.children[1])) {
            const Token& op = *token_at(term, 1);
            auto node = make_ast(AstKind::infix);
            node->name = op.kind == TokenKind::comma ? "," : op.kind == TokenKind::bar ? "|" : op.text;
            node->spec = spec;
            node->children.push_back(build_term(*node_at(term, 0)));
            node->children.push_back(build_term(*node_at(term, 2)));
            return node;
        }
        if (term.children.size() == 2 && std::holds_alternative<Token>(term.children[0])) {
            const Token& op = *token_at(term, 0);
            auto node = make_ast(AstKind::prefix);
            node->name = op.text;
            node->spec = spec;
            node->children.push_back(build_term(*node_at(term, 1)));
            return node;
        }
        const Token& op = *token_at(term, 1);
        auto node = make_ast(AstKind::postfix);
        node->name = op.text;
        node->spec = spec;
        node->children.push_back(build_term(*node_at(term, 0)));
        return node;
    }
};

}  // namespace

AstWithOrigin cst_to_ast(const CstNode& prolog_text, const DialectOptions& dialect) {
    AstWithOrigin result;
    AstBuilder builder(dialect, result);
    result.ast = builder.build_program(prolog_text);
    return result;
}

namespace {

void term_string(const AstNode& node, std::ostream& out);

void term_list(const std::vector<AstPtr>& nodes, std::size_t first, std::ostream& out) {
    out << '[';
    for (std::size_t i = first; i < nodes.size(); ++i) {
        if (i > first) out << ", ";
        term_string(*nodes[i], out);
    }
    out << ']';
}

void term_string(const AstNode& node, std::ostream& out) {
    switch (node.kind) {
        case AstKind::program:
            out << "program(";
            term_list(node.children, 0, out);
            out << ')';
            break;
        case AstKind::rule:
            out << "rule(";
            term_string(*node.children[0], out);
            out << ", ";
            term_list(node.children, 1, out);
            out << ')';
            break;
        case AstKind::fact:
            out << "fact(";
            term_string(*node.children[0], out);
            out << ')';
            break;
        case AstKind::directive:
            out << "directive(";
            term_string(*node.children[0], out);
            out << ')';
            break;
        case AstKind::compound:
            out << "compound(atom(" << node.name << "), ";
            term_list(node.children, 0, out);
            out << ')';
            break;
        case AstKind::atom:
            out << "atom(" << node.name << ')';
            break;
        case AstKind::variable:
            out << "variable('" << node.name << "')";
            break;
        case AstKind::integer:
            out << "integer(";
            if (node.negative) out << '-';
            out << node.int_value << ')';
            break;
        case AstKind::floating:
            out << "float(";
            if (node.negative) out << '-';
            out << node.text << ')';
            break;
        case AstKind::string:
            out << "string(" << node.text << ')';
            break;
        case AstKind::infix:
            out << "infix(" << node.name << ", " << specifier_name(node.spec) << ", ";
            term_string(*node.children[0], out);
            out << ", ";
            term_string(*node.children[1], out);
            out << ')';
            break;
        case AstKind::prefix:
            out << "prefix(" << node.name << ", " << specifier_name(node.spec) << ", ";
            term_string(*node.children[0], out);
            out << ')';
            break;
        case AstKind::postfix:
            out << "postfix(" << node.name << ", " << specifier_name(node.spec) << ", ";
            term_string(*node.children[0], out);
            out << ')';
            break;
        case AstKind::list:
            out << "list(";
            term_list(node.children, 0, out);
            if (node.tail) {
                out << ", tail(";
                term_string(*node.tail, out);
                out << ')';
            }
            out << ')';
            break;
        case AstKind::curly:
            out << "curly(";
            term_string(*node.children[0], out);
            out << ')';
            break;
        case AstKind::dict:
            out << "dict(";
            term_string(*node.children[0], out);
            out << ", [";
            for (std::size_t i = 1; i + 1 < node.children.size(); i += 2) {
                if (i > 1) out << ", ";
                term_string(*node.children[i], out);
                out << '-';
                term_string(*node.children[i + 1], out);
            }
            out << "])";
            break;
    }
}

void dump_into(const AstNode& node, int depth, std::ostream& out) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    out << pad;
    switch (node.kind) {
        case AstKind::program: out << "program"; break;
        case AstKind::rule: out << "rule"; break;
        case AstKind::fact: out << "fact"; break;
        case AstKind::directive: out << "directive"; break;
        case AstKind::compound: out << "compound " << node.name << "/" << node.children.size(); break;
        case AstKind::atom: out << "atom " << node.name; break;
        case AstKind::variable: out << "variable " << node.name; break;
        case AstKind::integer:
            out << "integer " << (node.negative ? "-" : "") << node.text;
            break;
        case AstKind::floating:
            out << "float " << (node.negative ? "-" : "") << node.text;
            break;
        case AstKind::string: out << "string " << node.text; break;
        case AstKind::infix: out << "infix " << node.name << " " << specifier_name(node.spec); break;
        case AstKind::prefix: out << "prefix " << node.name; break;
        case AstKind::postfix: out << "postfix " << node.name; break;
        case AstKind::list: out << "list"; break;
        case AstKind::curly: out << "curly"; break;
        case AstKind::dict: out << "dict"; break;
    }
    out << '\n';
    for (const auto& child : node.children) dump_into(*child, depth + 1, out);
    if (node.tail) {
        out << pad << "  |\n";
        dump_into(*node.tail, depth + 2, out);
    }
}

}  // namespace

std::string ast_term_string(const AstNode& node) {
    std::ostringstream out;
    term_string(node, out);
    return out.str();
}

std::string dump_ast(const AstNode& node) {
    std::ostringstream out;
    dump_into(node, 0, out);
    return out.str();
}

}  // namespace prolint
