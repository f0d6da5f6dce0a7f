#include "prolint/serialize.hpp"

#include <stdexcept>

#include "prolint/lexer.hpp"
#include "prolint/parser.hpp"

namespace prolint {

namespace {

bool ascii_graphic_char(char c) {
    switch (c) {
        case '#': case '$': case '&': case '*': case '+': case '-':
        case '.': case '/': case ':': case '<': case '=': case '>':
        case '?': case '@': case '^': case '~': case '\\':
            return true;
        default:
            return false;
    }
}

bool ident_char(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u >= 0x80 || c == '_' || (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
           (c >= 'A' && c <= 'Z');
}

bool quote_char(char c) {
    return c == '\'' || c == '"' || c == '`';
}

class Writer {
public:
    Writer(const SerializeOptions& opt, const OperatorTable& table, const DialectOptions& dialect)
        : opt_(opt), table_(table), dialect_(dialect) {}

    std::string write_program(const AstNode& program) {
        const auto& clauses = program.children;
        for (std::size_t i = 0; i < clauses.size(); ++i) {
            write_clause(*clauses[i]);
            if (i + 1 == clauses.size() || opt_.newline_after_clause)
                out_ += '\n';
            else
                force_space();
        }
        return std::move(out_);
    }

    std::string write_single(const AstNode& term) {
        write_term(term, 1200, true);
        return std::move(out_);
    }

private:
    std::string out_;
    const SerializeOptions& opt_;
    const OperatorTable& table_;
    const DialectOptions& dialect_;

    // --- low-level emission ----------------------------------------------

    void raw(std::string_view text) { out_ += text; }

    void emit(std::string_view tok) {
        if (needs_space(tok)) out_ += ' ';
        out_ += tok;
    }

    void force_space() {
        if (!out_.empty() && out_.back() != ' ' && out_.back() != '\n' && out_.back() != '\t')
            out_ += ' ';
    }

    void newline(int level) {
        out_ += '\n';
        if (opt_.indent_with_tab) {
            out_.append(static_cast<std::size_t>(level), '\t');
        } else {
            out_.append(static_cast<std::size_t>(level) * static_cast<std::size_t>(opt_.indent_width),
                        ' ');
        }
    }

    // A separating space is required wherever direct concatenation would
    // fuse two tokens into one (identifier runs, graphic runs, quote
    // doubling, a digit in front of a quote).
    bool needs_space(std::string_view next) const {
        if (out_.empty() || next.empty()) return false;
        char last = out_.back();
        char first = next.front();
        if (last == ' ' || last == '\n' || last == '\t') return false;
        if (ident_char(last) && ident_char(first)) return true;
        if (ascii_graphic_char(last) && ascii_graphic_char(first)) return true;
        if (quote_char(last) && last == first) return true;
        if (last >= '0' && last <= '9' && first == '\'') return true;
        return false;
    }

    // --- clause level -----------------------------------------------------

    void write_clause(const AstNode& clause) {
        switch (clause.kind) {
            case AstKind::rule:
                write_rule(clause);
                break;
            case AstKind::directive:
                emit(":-");
                force_space();
                write_term(*clause.children[0], 1199, true);
                break;
            case AstKind::fact:
                write_term(*clause.children[0], 1200, true);
                break;
            default:
                write_term(clause, 1200, true);
                break;
        }
        emit(".");
    }

    void write_rule(const AstNode& rule) {
        write_term(*rule.children[0], 1199, true);
        force_space();
        emit(":-");
        int level = 1;
        bool between_repeat_cut = false;
        for (std::size_t i = 1; i < rule.children.size(); ++i) {
            const AstNode& goal = *rule.children[i];
            bool is_cut = goal.kind == AstKind::atom && goal.name == "!";
            if (is_cut) between_repeat_cut = false;
            int goal_level = level + (between_repeat_cut ? 1 : 0);
            if (i == 1) {
                if (opt_.newline_after_rule_op)
                    newline(goal_level);
                else
                    force_space();
            } else {
                emit(",");
                if (opt_.newline_after_subgoal)
                    newline(goal_level);
                else
                    force_space();
            }
            bool last = i + 1 == rule.children.size();
            write_term(goal, last ? 1000 : 999, true);
            if (opt_.indent_between_repeat_cut && goal.kind == AstKind::atom &&
                goal.name == "repeat")
                between_repeat_cut = true;
        }
    }

    // --- terms -------------------------------------------------------------

    std::optional<OpDef> infix_def(const AstNode& node) const {
        if (node.name == ",") return OpDef{",", 1000, OpSpecifier::xfy};
        auto def = table_.infix_postfix(node.name);
        if (def && is_infix_specifier(def->specifier)) return def;
        return std::nullopt;
    }

    std::optional<OpDef> postfix_def(const AstNode& node) const {
        auto def = table_.infix_postfix(node.name);
        if (def && is_postfix_specifier(def->specifier)) return def;
        return std::nullopt;
    }

    int written_priority(const AstNode& node) const {
        switch (node.kind) {
            case AstKind::infix:
                if (auto def = infix_def(node)) return def->priority;
                return 0;
            case AstKind::prefix:
                if (auto def = table_.prefix(node.name)) return def->priority;
                return 0;
            case AstKind::postfix:
                if (auto def = postfix_def(node)) return def->priority;
                return 0;
            default:
                return 0;
        }
    }

    void write_term(const AstNode& node, int max_allowed, bool operand_ctx) {
        bool parens = written_priority(node) > max_allowed;
        if (node.kind == AstKind::atom && operand_ctx && table_.is_operator(node.name) &&
            !dialect_.allow_operator_as_operand)
            parens = true;
        if (parens) {
            emit("(");
            write_term(node, 1200, false);
            emit(")");
            return;
        }
        switch (node.kind) {
            case AstKind::atom:
                emit(quote_atom(node.name));
                break;
            case AstKind::variable:
                emit(node.name);
                break;
            case AstKind::integer:
            case AstKind::floating: {
                std::string text = node.text;
                if (node.negative) text.insert(text.begin(), '-');
                emit(text);
                break;
            }
            case AstKind::string:
                emit(node.text);
                break;
            case AstKind::compound:
                write_compound(node);
                break;
            case AstKind::list:
                write_list(node);
                break;
            case AstKind::curly:
                emit("{");
                write_term(*node.children[0], 1200, false);
                emit("}");
                break;
            case AstKind::dict:
                write_dict(node);
                break;
            case AstKind::infix:
                write_infix(node);
                break;
            case AstKind::prefix:
                write_prefix(node);
                break;
            case AstKind::postfix:
                write_postfix(node);
                break;
            case AstKind::program:
            case AstKind::rule:
            case AstKind::fact:
            case AstKind::directive:
                write_clause(node);
                break;
        }
    }

    void write_argument(const AstNode& node) {
        int bound = dialect_.allow_arg_precedence_geq_1000 ? 1200 : 999;
        bool comma_like = node.kind == AstKind::infix && (node.name == "," || node.name == "|");
        if (comma_like) {
            emit("(");
            write_term(node, 1200, false);
            emit(")");
            return;
        }
        // a closer always follows an argument, so a lone operator atom is
        // fine without parentheses (the arg rule)
        write_term(node, bound, false);
    }

    void write_arg_separator() {
        emit(",");
        if (opt_.space_after_arglist_comma) force_space();
    }

    void write_compound(const AstNode& node) {
        emit(quote_atom(node.name));
        raw("(");
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            if (i > 0) write_arg_separator();
            write_argument(*node.children[i]);
        }
        raw(")");
    }

    void write_list(const AstNode& node) {
        emit("[");
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            if (i > 0) write_arg_separator();
            write_argument(*node.children[i]);
        }
        if (node.tail) {
            emit("|");
            write_argument(*node.tail);
        }
        emit("]");
    }

    void write_dict(const AstNode& node) {
        const AstNode& tag = *node.children[0];
        if (tag.kind == AstKind::variable)
            emit(tag.name);
        else
            emit(quote_atom(tag.name));
        raw("{");
        bool first = true;
        for (std::size_t i = 1; i + 1 < node.children.size(); i += 2) {
            if (!first) write_arg_separator();
            first = false;
            write_term(*node.children[i], 0, false);  // key: atom or integer
            raw(":");
            force_space();
            write_argument(*node.children[i + 1]);
        }
        raw("}");
    }

    void write_infix(const AstNode& node) {
        auto def = infix_def(node);
        if (!def) {
            write_functional(node);
            return;
        }
        int left_max = def->specifier == OpSpecifier::yfx ? def->priority : def->priority - 1;
        int right_max = def->specifier == OpSpecifier::xfy ? def->priority : def->priority - 1;
        write_term(*node.children[0], left_max, true);
        if (node.name == ",") {
            emit(",");
            force_space();
        } else {
            force_space();
            emit(node.name == "|" ? "|" : node.name);
            force_space();
        }
        write_term(*node.children[1], right_max, true);
    }

    void write_prefix(const AstNode& node) {
        auto def = table_.prefix(node.name);
        if (!def) {
            write_functional(node);
            return;
        }
        int arg_max = def->specifier == OpSpecifier::fy ? def->priority : def->priority - 1;
        emit(quote_atom(node.name));
        // the space keeps "- 1" a prefix application and "f (x)" impossible
        force_space();
        write_term(*node.children[0], arg_max, true);
    }

    void write_postfix(const AstNode& node) {
        auto def = postfix_def(node);
        if (!def) {
            write_functional(node);
            return;
        }
        int arg_max = def->specifier == OpSpecifier::yf ? def->priority : def->priority - 1;
        write_term(*node.children[0], arg_max, true);
        emit(node.name);
    }

    void write_functional(const AstNode& node) {
        emit(quote_atom(node.name));
        raw("(");
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            if (i > 0) write_arg_separator();
            write_argument(*node.children[i]);
        }
        raw(")");
    }
};

}  // namespace

std::string quote_atom(const std::string& name) {
    if (is_plain_name_token(name)) return name;
    std::string out = "'";
    for (char c : name) {
        switch (c) {
            case '\'': out += "\\'"; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            case '\a': out += "\\a"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\v': out += "\\v"; break;
            default: {
                unsigned char u = static_cast<unsigned char>(c);
                if (u < 0x20 || u == 0x7F) {
                    static const char* hex = "0123456789abcdef";
                    out += "\\x";
                    if (u >= 16) out += hex[u >> 4];
                    out += hex[u & 0xF];
                    out += '\\';
                } else {
                    out += c;
                }
                break;
            }
        }
    }
    out += '\'';
    return out;
}

std::string serialize_ast(const AstNode& ast, const SerializeOptions& options,
                          const OperatorTable& table, const DialectOptions& dialect) {
    Writer writer(options, table, dialect);
    if (ast.kind == AstKind::program) return writer.write_program(ast);
    if (ast.kind == AstKind::rule || ast.kind == AstKind::fact || ast.kind == AstKind::directive) {
        auto program = make_ast(AstKind::program);
        auto copy = ast_clone(ast);
        program->children.push_back(std::move(copy));
        return Writer(options, table, dialect).write_program(*program);
    }
    return writer.write_single(ast);
}

std::unique_ptr<CstNode> ast_to_cst(const AstNode& ast, const SerializeOptions& options,
                                    const OperatorTable& table, const DialectOptions& dialect) {
    std::string text = serialize_ast(ast, options, table, dialect);
    LexResult lexed = tokenize(text, dialect);
    if (!lexed.ok())
        throw std::logic_error("serializer produced unlexable text: " + lexed.error->message +
                               "\n" + text);
    ParseOutcome outcome = parse_program(lexed, table, dialect);
    if (!outcome.ok())
        throw std::logic_error("serializer produced unparsable text: " +
                               (outcome.errors.empty() ? "timeout" : outcome.errors[0].message) +
                               "\n" + text);
    return std::move(outcome.cst);
}

std::optional<AstOpDirective> ast_op_directive(const AstNode& clause) {
    if (clause.kind != AstKind::directive || clause.children.empty()) return std::nullopt;
    const AstNode& goal = *clause.children[0];
    if (goal.kind != AstKind::compound || goal.name != "op" || goal.children.size() != 3)
        return std::nullopt;
    AstOpDirective directive;
    const AstNode& prio = *goal.children[0];
    if (prio.kind != AstKind::integer) return std::nullopt;
    directive.priority = static_cast<int>(prio.negative ? -prio.int_value : prio.int_value);
    const AstNode& spec = *goal.children[1];
    if (spec.kind != AstKind::atom) return std::nullopt;
    auto parsed = parse_specifier(spec.name);
    if (!parsed) return std::nullopt;
    directive.spec = *parsed;
    const AstNode& names = *goal.children[2];
    if (names.kind == AstKind::atom) {
        if (names.name != "[]") directive.names.push_back(names.name);
    } else if (names.kind == AstKind::list && names.tail == nullptr) {
        for (const auto& item : names.children) {
            if (item->kind != AstKind::atom) return std::nullopt;
            directive.names.push_back(item->name);
        }
    } else {
        return std::nullopt;
    }
    return directive;
}

FormatResult format_source(std::string_view source, const SerializeOptions& options,
                           const OperatorTable& base, const DialectOptions& dialect) {
    FormatResult result;
    LexResult lexed = tokenize(source, dialect);
    if (!lexed.ok()) {
        result.error = lexed.error->message;
        return result;
    }
    ParseOutcome outcome = parse_program(lexed, base, dialect);
    if (!outcome.errors.empty()) {
        result.error = outcome.errors[0].message;
        return result;
    }
    AstWithOrigin ast = cst_to_ast(*outcome.cst, dialect);

    OperatorTable table = base;
    for (const OpDef& def : outcome.deduced_ops) {
        OperatorTable next;
        if (!table.apply(def.priority, def.specifier, def.name, next)) table = std::move(next);
    }
    std::vector<std::string> pieces;
    for (const auto& clause : ast.ast->children) {
        pieces.push_back(serialize_ast(*clause, options, table, dialect));
        if (auto op = ast_op_directive(*clause)) {
            OpDirectiveResult applied = apply_op_directive(table, op->priority, op->spec, op->names);
            if (!applied.error) table = std::move(applied.table);
        }
    }
    std::string text;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        std::string piece = std::move(pieces[i]);
        if (!options.newline_after_clause && i + 1 < pieces.size()) {
            while (!piece.empty() && piece.back() == '\n') piece.pop_back();
            piece += ' ';
        }
        text += piece;
    }
    result.text = std::move(text);
    result.ok = true;
    return result;
}

}  // namespace prolint
