#include "prolint/parser.hpp"

#include <algorithm>

namespace prolint {

namespace {

constexpr int kOperatorAtomPriority = 1201;

struct TermCtx {
    int max_priority;
    bool comma_stops = false;  // comma token is a separator, not the ',' operator
    bool bar_stops = false;    // bar token closes a list tail
};

class Parser {
public:
    Parser(std::span<const Token> tokens, const OperatorTable& table,
           const DialectOptions& dialect)
        : toks_(tokens), table_(&table), dialect_(dialect) {}

    std::size_t pos() const { return pos_; }
    const ParseError& error() const { return err_; }

    std::unique_ptr<CstNode> parse(const TermCtx& ctx) {
        auto term = parse_primary(ctx);
        if (!term) return nullptr;
        term = parse_operators(std::move(term), ctx);
        if (!term) return nullptr;
        if (term->priority > ctx.max_priority) {
            SourceSpan span;
            cst_span(*term, span);
            return fail_at(span, "term of priority " + std::to_string(term->priority) +
                                     " where maximum " + std::to_string(ctx.max_priority) +
                                     " is allowed (needs parentheses)");
        }
        return term;
    }

private:
    std::span<const Token> toks_;
    const OperatorTable* table_;
    const DialectOptions& dialect_;
    std::size_t pos_ = 0;
    ParseError err_;

    const Token* peek(std::size_t ahead = 0) const {
        return pos_ + ahead < toks_.size() ? &toks_[pos_ + ahead] : nullptr;
    }

    Token take() { return toks_[pos_++]; }

    std::unique_ptr<CstNode> fail(const Token* at, std::string message) {
        SourceSpan span;
        if (at != nullptr) {
            span = at->span;
        } else if (!toks_.empty()) {
            span = toks_.back().span;
            span.byte_start = span.byte_end;
            span.col_start = span.col_end;
            span.line_start = span.line_end;
        }
        return fail_at(span, std::move(message));
    }

    std::unique_ptr<CstNode> fail_at(SourceSpan span, std::string message) {
        if (err_.message.empty()) err_ = ParseError{std::move(message), span};
        return nullptr;
    }

    bool token_starts_term(const Token& tok) const {
        switch (tok.kind) {
            case TokenKind::integer:
            case TokenKind::floating:
            case TokenKind::char_code_constant:
            case TokenKind::double_quoted:
            case TokenKind::back_quoted:
            case TokenKind::variable:
            case TokenKind::open_paren:
            case TokenKind::open_ct:
            case TokenKind::open_list:
            case TokenKind::open_curly:
                return true;
            case TokenKind::name:
                if (!table_->is_operator(tok.text)) return true;
                if (table_->prefix(tok.text)) return true;
                return dialect_.allow_operator_as_operand;
            default:
                return false;
        }
    }

    // --- primaries ------------------------------------------------------

    std::unique_ptr<CstNode> parse_primary(const TermCtx& ctx) {
        const Token* t = peek();
        if (t == nullptr) return fail(nullptr, "unexpected end of input, expected a term");
        switch (t->kind) {
            case TokenKind::integer:
            case TokenKind::floating:
            case TokenKind::char_code_constant:
            case TokenKind::double_quoted:
            case TokenKind::back_quoted:
                return leaf_term();
            case TokenKind::variable: {
                if (const Token* nx = peek(1); nx != nullptr && nx->kind == TokenKind::dict_open)
                    return parse_dict_term();
                return leaf_term();
            }
            case TokenKind::open_paren:
            case TokenKind::open_ct:
                return parse_parenthesized();
            case TokenKind::open_list:
                return parse_list(ctx);
            case TokenKind::open_curly:
                return parse_curly(ctx);
            case TokenKind::name:
                return parse_name_primary(ctx);
            case TokenKind::end:
                return fail(t, "unexpected end token, expected a term");
            default:
                return fail(t, std::string("unexpected ") + token_kind_name(t->kind) +
                                   " token, expected a term");
        }
    }

    std::unique_ptr<CstNode> leaf_term() {
        auto node = make_cst(CstLabel::term, 0);
        node->add(take());
        return node;
    }

    std::unique_ptr<CstNode> parse_parenthesized() {
        auto node = make_cst(CstLabel::term, 0);
        node->add(take());  // ( token
        auto inner = parse(TermCtx{1200});
        if (!inner) return nullptr;
        node->add(std::move(inner));
        const Token* t = peek();
        if (t == nullptr || t->kind != TokenKind::close_paren)
            return fail(t, "expected ')'");
        node->add(take());
        return node;
    }

    std::unique_ptr<CstNode> parse_name_primary(const TermCtx& ctx) {
        const Token& t = toks_[pos_];
        const Token* nx = peek(1);
        if (nx != nullptr && nx->kind == TokenKind::open_ct)
            return parse_compound();
        if (nx != nullptr && nx->kind == TokenKind::dict_open)
            return parse_dict_term();
        // '-' immediately followed by a numeral is a negative literal
        if (t.text == "-" && nx != nullptr && nx->layout_before.empty() &&
            (nx->kind == TokenKind::integer || nx->kind == TokenKind::floating ||
             nx->kind == TokenKind::char_code_constant)) {
            auto node = make_cst(CstLabel::negative_number_term, 0);
            node->add(take());
            node->add(take());
            return node;
        }
        if (auto def = table_->prefix(t.text)) {
            int operand_max = def->specifier == OpSpecifier::fy ? def->priority : def->priority - 1;
            if (def->priority <= ctx.max_priority && nx != nullptr && token_starts_term(*nx)) {
                auto node = make_cst(CstLabel::operator_notation_term, def->priority);
                node->op_spec = def->specifier;
                node->add(take());
                TermCtx operand_ctx = ctx;
                operand_ctx.max_priority = operand_max;
                auto operand = parse_operand(operand_ctx);
                if (!operand) return nullptr;
                node->add(std::move(operand));
                return node;
            }
        }
        return atom_term();
    }

    std::unique_ptr<CstNode> atom_term() {
        const Token& t = toks_[pos_];
        int priority = 0;
        // An atom that is an operator needs parentheses when used as an
        // operand, except directly before a closing token (the arg rule:
        // f(-), [-] and (-) are fine; "X = -" is not).
        if (table_->is_operator(t.text) && !dialect_.allow_operator_as_operand &&
            !next_token_closes(1))
            priority = kOperatorAtomPriority;
        auto node = make_cst(CstLabel::term, priority);
        node->add(take());
        return node;
    }

    bool next_token_closes(std::size_t ahead) const {
        const Token* t = peek(ahead);
        if (t == nullptr) return false;
        switch (t->kind) {
            case TokenKind::comma:
            case TokenKind::bar:
            case TokenKind::close_paren:
            case TokenKind::close_list:
            case TokenKind::close_curly:
                return true;
            default:
                return false;
        }
    }

    std::unique_ptr<CstNode> parse_compound() {
        auto node = make_cst(CstLabel::compound_term, 0);
        node->add(take());  // functor name
        node->add(take());  // open_ct
        const Token* t = peek();
        if (t != nullptr && t->kind == TokenKind::close_paren) {
            if (!dialect_.allow_compounds_with_zero_arguments)
                return fail(t, "compound term with zero arguments");
            node->add(take());
            return node;
        }
        auto args = parse_arg_list();
        if (!args) return nullptr;
        node->add(std::move(args));
        t = peek();
        if (t == nullptr || t->kind != TokenKind::close_paren)
            return fail(t, "expected ')' after argument list");
        node->add(take());
        return node;
    }

    std::unique_ptr<CstNode> parse_arg_list() {
        auto list = make_cst(CstLabel::arg_list, 0);
        while (true) {
            auto arg = parse_argument();
            if (!arg) return nullptr;
            list->add(std::move(arg));
            const Token* t = peek();
            if (t != nullptr && t->kind == TokenKind::comma) {
                list->add(take());
                continue;
            }
            break;
        }
        return list;
    }

    std::unique_ptr<CstNode> parse_argument() {
        TermCtx ctx;
        if (dialect_.allow_arg_precedence_geq_1000) {
            ctx.max_priority = 1200;
            ctx.comma_stops = true;
            ctx.bar_stops = true;
        } else {
            ctx.max_priority = 999;
        }
        return parse(ctx);
    }

    std::unique_ptr<CstNode> parse_list(const TermCtx& ctx) {
        (void)ctx;
        auto node = make_cst(CstLabel::list_term, 0);
        node->add(take());  // [
        const Token* t = peek();
        if (t != nullptr && t->kind == TokenKind::close_list) {
            node->add(take());
            return maybe_compound_functor(std::move(node));
        }
        while (true) {
            auto item = parse_list_item();
            if (!item) return nullptr;
            node->add(std::move(item));
            t = peek();
            if (t == nullptr)
                return fail(t, "unterminated list, expected ']'");
            if (t->kind == TokenKind::comma) {
                node->add(take());
                continue;
            }
            if (t->kind == TokenKind::bar) {
                node->add(take());
                auto tail = parse_list_item();
                if (!tail) return nullptr;
                node->add(std::move(tail));
                t = peek();
            }
            break;
        }
        if (t == nullptr || t->kind != TokenKind::close_list)
            return fail(t, "expected ']' at end of list");
        node->add(take());
        return node;
    }

    std::unique_ptr<CstNode> parse_list_item() {
        TermCtx ctx;
        if (dialect_.allow_arg_precedence_geq_1000) {
            ctx.max_priority = 1200;
            ctx.comma_stops = true;
        } else {
            ctx.max_priority = 999;
        }
        ctx.bar_stops = true;
        return parse(ctx);
    }

    std::unique_ptr<CstNode> parse_curly(const TermCtx& ctx) {
        (void)ctx;
        auto node = make_cst(CstLabel::curly_term, 0);
        node->add(take());  // {
        const Token* t = peek();
        if (t != nullptr && t->kind == TokenKind::close_curly) {
            node->add(take());
            return maybe_compound_functor(std::move(node));
        }
        auto inner = parse(TermCtx{1200});
        if (!inner) return nullptr;
        node->add(std::move(inner));
        t = peek();
        if (t == nullptr || t->kind != TokenKind::close_curly)
            return fail(t, "expected '}'");
        node->add(take());
        return node;
    }

    // '[]' and '{}' are atoms and may act as compound functors when an
    // open_ct follows directly.
    std::unique_ptr<CstNode> maybe_compound_functor(std::unique_ptr<CstNode> atom) {
        const Token* t = peek();
        if (t == nullptr || t->kind != TokenKind::open_ct) return atom;
        auto node = make_cst(CstLabel::compound_term, 0);
        node->add(std::move(atom));
        node->add(take());  // open_ct
        if (const Token* c = peek(); c != nullptr && c->kind == TokenKind::close_paren) {
            if (!dialect_.allow_compounds_with_zero_arguments)
                return fail(c, "compound term with zero arguments");
            node->add(take());
            return node;
        }
        auto args = parse_arg_list();
        if (!args) return nullptr;
        node->add(std::move(args));
        const Token* c = peek();
        if (c == nullptr || c->kind != TokenKind::close_paren)
            return fail(c, "expected ')' after argument list");
        node->add(take());
        return node;
    }

    std::unique_ptr<CstNode> parse_dict_term() {
        auto node = make_cst(CstLabel::dict_term, 0);
        node->add(take());  // tag (name or variable)
        node->add(take());  // dict_open
        const Token* t = peek();
        if (t != nullptr && t->kind == TokenKind::close_curly) {
            node->add(take());
            return node;
        }
        while (true) {
            t = peek();
            if (t == nullptr || (t->kind != TokenKind::name && t->kind != TokenKind::integer))
                return fail(t, "expected dict key (atom or integer)");
            node->add(take());
            t = peek();
            if (t == nullptr || !(t->kind == TokenKind::name && t->text == ":"))
                return fail(t, "expected ':' after dict key");
            node->add(take());
            TermCtx value_ctx;
            value_ctx.max_priority = 999;
            value_ctx.comma_stops = true;
            auto value = parse(value_ctx);
            if (!value) return nullptr;
            node->add(std::move(value));
            t = peek();
            if (t != nullptr && t->kind == TokenKind::comma) {
                node->add(take());
                continue;
            }
            break;
        }
        t = peek();
        if (t == nullptr || t->kind != TokenKind::close_curly)
            return fail(t, "expected '}' at end of dict");
        node->add(take());
        return node;
    }

    // --- infix / postfix loop --------------------------------------------

    std::unique_ptr<CstNode> parse_operators(std::unique_ptr<CstNode> left, const TermCtx& ctx) {
        while (true) {
            const Token* t = peek();
            if (t == nullptr) break;
            std::optional<OpDef> def;
            if (t->kind == TokenKind::comma) {
                if (ctx.comma_stops) break;
                def = OpDef{",", 1000, OpSpecifier::xfy};
            } else if (t->kind == TokenKind::bar) {
                if (ctx.bar_stops) break;
                def = table_->infix_postfix("|");
                if (!def) break;
            } else if (t->kind == TokenKind::name) {
                def = table_->infix_postfix(t->text);
                if (!def) break;
            } else {
                break;
            }
            if (def->priority > ctx.max_priority) break;
            if (is_infix_specifier(def->specifier)) {
                int left_max = def->specifier == OpSpecifier::yfx ? def->priority
                                                                  : def->priority - 1;
                if (left->priority > left_max) break;
                auto node = make_cst(CstLabel::operator_notation_term, def->priority);
                node->op_spec = def->specifier;
                node->add(std::move(left));
                node->add(take());
                TermCtx right_ctx = ctx;
                right_ctx.max_priority = def->specifier == OpSpecifier::xfy ? def->priority
                                                                            : def->priority - 1;
                auto right = parse_operand(right_ctx);
                if (!right) return nullptr;
                node->add(std::move(right));
                left = std::move(node);
            } else {  // postfix
                int left_max = def->specifier == OpSpecifier::yf ? def->priority
                                                                 : def->priority - 1;
                if (left->priority > left_max) break;
                auto node = make_cst(CstLabel::operator_notation_term, def->priority);
                node->op_spec = def->specifier;
                node->add(std::move(left));
                node->add(take());
                left = std::move(node);
            }
        }
        return left;
    }

    // Operand slot of a prefix or infix operator; the bound comes from the
    // operator's specifier.
    std::unique_ptr<CstNode> parse_operand(const TermCtx& ctx) {
        auto term = parse_primary(ctx);
        if (!term) return nullptr;
        term = parse_operators(std::move(term), ctx);
        if (!term) return nullptr;
        if (term->priority > ctx.max_priority) {
            SourceSpan span;
            cst_span(*term, span);
            return fail_at(span, "operand of priority " + std::to_string(term->priority) +
                                     " exceeds the operator's bound of " +
                                     std::to_string(ctx.max_priority));
        }
        return term;
    }
};

// --- program-level parsing -------------------------------------------------

bool deadline_passed(const Deadline& deadline) {
    return deadline.has_value() && std::chrono::steady_clock::now() >= *deadline;
}

struct ClauseParse {
    std::unique_ptr<CstNode> node;  // clause / directive
    ParseError error;
    std::size_t consumed = 0;
    bool ok = false;
};

const Token* operator_notation_op(const CstNode& node) {
    if (node.label != CstLabel::operator_notation_term) return nullptr;
    for (const CstChild& child : node.children)
        if (const Token* tok = std::get_if<Token>(&child)) return tok;
    return nullptr;
}

bool is_prefix_notation(const CstNode& node) {
    return node.label == CstLabel::operator_notation_term && node.children.size() == 2 &&
           std::holds_alternative<Token>(node.children[0]);
}

const CstNode* child_node(const CstNode& node, std::size_t index) {
    if (index >= node.children.size()) return nullptr;
    auto* p = std::get_if<std::unique_ptr<CstNode>>(&node.children[index]);
    return p ? p->get() : nullptr;
}

const Token* child_token(const CstNode& node, std::size_t index) {
    if (index >= node.children.size()) return nullptr;
    return std::get_if<Token>(&node.children[index]);
}

ClauseParse parse_one_clause(std::span<const Token> tokens, std::size_t start,
                             const OperatorTable& table, const DialectOptions& dialect) {
    ClauseParse result;
    Parser parser(tokens.subspan(start), table, dialect);
    auto term = parser.parse(TermCtx{1200});
    if (!term) {
        result.error = parser.error();
        return result;
    }
    std::size_t after = start + parser.pos();
    if (after >= tokens.size() || tokens[after].kind != TokenKind::end) {
        SourceSpan span;
        if (after < tokens.size()) {
            span = tokens[after].span;
        } else {
            span = tokens.back().span;
            span.byte_start = span.byte_end;
        }
        result.error = ParseError{"expected '.' at end of clause", span};
        return result;
    }
    bool directive = false;
    if (is_prefix_notation(*term)) {
        const Token* op = operator_notation_op(*term);
        if (op != nullptr && (op->text == ":-" || op->text == "?-")) directive = true;
    }
    auto clause = make_cst(directive ? CstLabel::directive : CstLabel::clause, 0);
    clause->add(std::move(term));
    clause->add(tokens[after]);
    result.node = std::move(clause);
    result.consumed = after + 1 - start;
    result.ok = true;
    return result;
}

// Extracts op(P, Spec, Name-or-names) from a directive's goal term.
struct OpDirective {
    int priority;
    OpSpecifier spec;
    std::vector<std::string> names;
};

std::optional<std::string> atom_of_term(const CstNode& node, const DialectOptions& dialect) {
    if (node.label == CstLabel::term && node.children.size() == 1) {
        const Token* tok = child_token(node, 0);
        if (tok != nullptr && tok->kind == TokenKind::name)
            return name_token_value(*tok, dialect);
    }
    if (node.label == CstLabel::list_term && node.children.size() == 2) return "[]";
    if (node.label == CstLabel::curly_term && node.children.size() == 2) return "{}";
    return std::nullopt;
}

std::optional<OpDirective> extract_op_directive(const CstNode& goal,
                                                const DialectOptions& dialect) {
    if (goal.label != CstLabel::compound_term) return std::nullopt;
    const Token* functor = child_token(goal, 0);
    if (functor == nullptr || name_token_value(*functor, dialect) != "op") return std::nullopt;
    const CstNode* args = child_node(goal, 2);
    if (args == nullptr || args->label != CstLabel::arg_list) return std::nullopt;
    std::vector<const CstNode*> arg_nodes;
    for (const CstChild& child : args->children)
        if (auto* p = std::get_if<std::unique_ptr<CstNode>>(&child)) arg_nodes.push_back(p->get());
    if (arg_nodes.size() != 3) return std::nullopt;

    OpDirective directive;
    const CstNode* prio = arg_nodes[0];
    if (prio->label == CstLabel::term && prio->children.size() == 1 &&
        child_token(*prio, 0) != nullptr && child_token(*prio, 0)->kind == TokenKind::integer) {
        directive.priority =
            static_cast<int>(integer_token_value(*child_token(*prio, 0), dialect));
    } else if (prio->label == CstLabel::negative_number_term) {
        directive.priority = -1;  // out of range, reported by apply
    } else {
        return std::nullopt;
    }
    auto spec_atom = atom_of_term(*arg_nodes[1], dialect);
    if (!spec_atom) return std::nullopt;
    auto spec = parse_specifier(*spec_atom);
    if (!spec) {
        directive.priority = -1;  // force an OpError with a clear message
        directive.spec = OpSpecifier::xfx;
    } else {
        directive.spec = *spec;
    }

    const CstNode* names = arg_nodes[2];
    if (auto atom = atom_of_term(*names, dialect)) {
        if (*atom != "[]") directive.names.push_back(*atom);
        return directive;
    }
    if (names->label == CstLabel::list_term) {
        for (const CstChild& child : names->children) {
            if (auto* p = std::get_if<std::unique_ptr<CstNode>>(&child)) {
                auto atom = atom_of_term(**p, dialect);
                if (!atom) return std::nullopt;
                directive.names.push_back(*atom);
            }
        }
        return directive;
    }
    return std::nullopt;
}

std::optional<OpDirective> directive_op_request(const CstNode& clause,
                                                const DialectOptions& dialect) {
    if (clause.label != CstLabel::directive) return std::nullopt;
    const CstNode* term = child_node(clause, 0);
    if (term == nullptr || !is_prefix_notation(*term)) return std::nullopt;
    const CstNode* goal = child_node(*term, 1);
    if (goal == nullptr) return std::nullopt;
    return extract_op_directive(*goal, dialect);
}

std::size_t resync_past_end(std::span<const Token> tokens, std::size_t from) {
    std::size_t i = from;
    while (i < tokens.size() && tokens[i].kind != TokenKind::end) ++i;
    return i < tokens.size() ? i + 1 : i;
}

// Hypothesis search for deduce_operators: try a prefix definition for the
// clause's first atom, then a postfix definition for each later atom.
struct Deduction {
    OpDef def;
    std::unique_ptr<CstNode> clause;
    std::size_t consumed;
};

std::optional<Deduction> try_deduce(std::span<const Token> tokens, std::size_t start,
                                    const OperatorTable& table, const DialectOptions& dialect) {
    std::size_t clause_end = resync_past_end(tokens, start);
    std::vector<OpDef> candidates;
    auto add_candidate = [&](const Token& tok, OpSpecifier spec) {
        std::string name = name_token_value(tok, dialect);
        if (table.is_operator(name)) return;
        candidates.push_back(OpDef{std::move(name), 1, spec});
    };
    for (std::size_t i = start; i < clause_end && candidates.size() < 8; ++i) {
        if (tokens[i].kind != TokenKind::name) continue;
        add_candidate(tokens[i], i == start ? OpSpecifier::fy : OpSpecifier::yf);
    }
    for (OpDef& cand : candidates) {
        OperatorTable augmented;
        if (table.apply(cand.priority, cand.specifier, cand.name, augmented)) continue;
        ClauseParse retry = parse_one_clause(tokens, start, augmented, dialect);
        if (retry.ok)
            return Deduction{std::move(cand), std::move(retry.node), retry.consumed};
    }
    return std::nullopt;
}

}  // namespace

ParseOutcome parse_program(const LexResult& lexed, const OperatorTable& table,
                           const DialectOptions& dialect, Deadline deadline) {
    ParseOutcome outcome;
    outcome.table_final = table;
    outcome.cst = make_cst(CstLabel::prolog_text, 0);
    std::span<const Token> tokens(lexed.tokens);

    std::size_t pos = 0;
    while (pos < tokens.size()) {
        if (deadline_passed(deadline)) {
            outcome.timed_out = true;
            break;
        }
        ClauseParse clause = parse_one_clause(tokens, pos, outcome.table_final, dialect);
        if (!clause.ok && dialect.deduce_operators) {
            if (auto deduced = try_deduce(tokens, pos, outcome.table_final, dialect)) {
                OperatorTable augmented;
                outcome.table_final.apply(deduced->def.priority, deduced->def.specifier,
                                          deduced->def.name, augmented);
                outcome.table_final = std::move(augmented);
                outcome.deduced_ops.push_back(deduced->def);
                outcome.cst->add(std::move(deduced->clause));
                pos += deduced->consumed;
                continue;
            }
        }
        if (!clause.ok) {
            outcome.errors.push_back(clause.error);
            std::size_t next = resync_past_end(tokens, pos);
            auto invalid = make_cst(CstLabel::invalid_clause, 0);
            for (std::size_t i = pos; i < next; ++i) invalid->add(tokens[i]);
            outcome.cst->add(std::move(invalid));
            pos = next;
            continue;
        }
        if (auto op = directive_op_request(*clause.node, dialect)) {
            OpDirectiveResult applied =
                apply_op_directive(outcome.table_final, op->priority, op->spec, op->names);
            if (applied.error) {
                SourceSpan span;
                cst_span(*clause.node, span);
                outcome.errors.push_back(
                    ParseError{"op directive rejected: " + applied.error->message, span});
            } else {
                outcome.table_final = std::move(applied.table);
            }
        }
        outcome.cst->add(std::move(clause.node));
        pos += clause.consumed;
    }

    // leftover tokens after a timeout stay in the tree so serialization is
    // still byte-exact
    if (outcome.timed_out && pos < tokens.size()) {
        auto rest = make_cst(CstLabel::invalid_clause, 0);
        for (std::size_t i = pos; i < tokens.size(); ++i) rest->add(tokens[i]);
        outcome.cst->add(std::move(rest));
    }

    auto eof = make_cst(CstLabel::end_of_file, 0);
    Token marker;
    marker.kind = TokenKind::end;
    marker.text.clear();
    marker.layout_before = lexed.trailing;
    if (!lexed.trailing.empty()) {
        const SourceSpan& last = lexed.trailing.back().span;
        marker.span = {last.byte_end, last.byte_end, last.line_end, last.col_end, last.line_end,
                       last.col_end};
    } else if (!lexed.tokens.empty()) {
        const SourceSpan& last = lexed.tokens.back().span;
        marker.span = {last.byte_end, last.byte_end, last.line_end, last.col_end, last.line_end,
                       last.col_end};
    }
    eof->add(std::move(marker));
    outcome.cst->add(std::move(eof));
    return outcome;
}

std::optional<TermResult> parse_term(std::span<const Token> tokens, int max_priority,
                                     const OperatorTable& table, const DialectOptions& dialect,
                                     ParseError& error) {
    Parser parser(tokens, table, dialect);
    TermCtx ctx;
    ctx.max_priority = max_priority;
    auto node = parser.parse(ctx);
    if (!node) {
        error = parser.error();
        return std::nullopt;
    }
    return TermResult{std::move(node), parser.pos()};
}

}  // namespace prolint
