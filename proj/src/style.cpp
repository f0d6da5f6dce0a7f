#include "prolint/style.hpp"

#include <algorithm>
#include <numeric>

#include "prolint/utf8.hpp"

namespace prolint {

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
    std::stable_sort(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                         if (a.file != b.file) return a.file < b.file;
                         if (a.span.byte_start != b.span.byte_start)
                             return a.span.byte_start < b.span.byte_start;
                         return a.rule_id < b.rule_id;
                     });
}

std::string format_diagnostic(const Diagnostic& d, bool color) {
    const char* sev = d.severity == Severity::error ? "error" : "warning";
    std::string out = d.file + ":" + std::to_string(d.span.line_start) + ":" +
                      std::to_string(d.span.col_start) + ": ";
    if (color)
        out += d.severity == Severity::error ? "\x1b[31m" : "\x1b[33m";
    out += sev;
    if (color) out += "\x1b[0m";
    out += " ";
    out += d.rule_id;
    out += " ";
    out += d.message;
    return out;
}

namespace {

// --- physical line analysis -------------------------------------------------

struct LineInfo {
    std::string_view text;
    std::size_t byte_offset = 0;
    int char_length = 0;
    // leading whitespace before any content
    int indent_chars = 0;     // 0 when the line starts with content or is blank
    bool indent_spaces = false;
    bool indent_tabs = false;
    bool blank = true;        // whitespace only
    int trailing_ws = 0;      // trailing spaces/tabs on a non-blank line
};

std::vector<LineInfo> analyze_lines(std::string_view source) {
    std::vector<LineInfo> lines;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        std::string_view text = source.substr(start, end - start);
        if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
        LineInfo info;
        info.text = text;
        info.byte_offset = start;
        std::size_t i = 0;
        while (i < text.size()) {
            auto d = utf8::decode(text, i);
            ++info.char_length;
            i += static_cast<std::size_t>(d.len > 0 ? d.len : 1);
        }
        std::size_t lead = 0;
        while (lead < text.size() && (text[lead] == ' ' || text[lead] == '\t')) {
            if (text[lead] == ' ')
                info.indent_spaces = true;
            else
                info.indent_tabs = true;
            ++lead;
        }
        info.blank = lead == text.size();
        if (info.blank) {
            info.indent_spaces = info.indent_tabs = false;
        } else {
            info.indent_chars = static_cast<int>(lead);
            std::size_t tail = text.size();
            while (tail > lead && (text[tail - 1] == ' ' || text[tail - 1] == '\t')) --tail;
            info.trailing_ws = static_cast<int>(text.size() - tail);
        }
        lines.push_back(info);
    };
    for (std::size_t i = 0; i < source.size(); ++i) {
        if (source[i] == '\n') {
            flush(i);
            start = i + 1;
        }
    }
    if (start < source.size()) flush(source.size());
    return lines;
}

SourceSpan line_span(const LineInfo& line, int line_number) {
    SourceSpan span;
    span.byte_start = line.byte_offset;
    span.byte_end = line.byte_offset + line.text.size();
    span.line_start = span.line_end = line_number;
    span.col_start = 1;
    span.col_end = line.char_length + 1;
    return span;
}

// --- CST walking --------------------------------------------------------------

const CstNode* node_at(const CstNode& parent, std::size_t i) {
    if (i >= parent.children.size()) return nullptr;
    auto* p = std::get_if<std::unique_ptr<CstNode>>(&parent.children[i]);
    return p ? p->get() : nullptr;
}

const Token* token_at(const CstNode& parent, std::size_t i) {
    if (i >= parent.children.size()) return nullptr;
    return std::get_if<Token>(&parent.children[i]);
}

const Token* first_token(const CstNode& node) {
    for (const CstChild& child : node.children) {
        if (const Token* tok = std::get_if<Token>(&child)) return tok;
        if (const Token* tok = first_token(**std::get_if<std::unique_ptr<CstNode>>(&child)))
            return tok;
    }
    return nullptr;
}

const Token* last_token(const CstNode& node) {
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
        if (const Token* tok = std::get_if<Token>(&*it)) return tok;
        if (const Token* tok = last_token(**std::get_if<std::unique_ptr<CstNode>>(&*it)))
            return tok;
    }
    return nullptr;
}

bool is_atom_token_term(const CstNode& node, std::string_view text) {
    if (node.label != CstLabel::term || node.children.size() != 1) return false;
    const Token* tok = token_at(node, 0);
    return tok != nullptr && tok->kind == TokenKind::name && tok->text == text;
}

struct ClauseInfo {
    const CstNode* clause = nullptr;
    const CstNode* term = nullptr;
    const Token* end_token = nullptr;
    const Token* first = nullptr;
    bool is_rule = false;
    const Token* rule_op = nullptr;
    std::vector<const CstNode*> subgoals;
    std::vector<const Token*> body_commas;
};

void flatten_conjunction(const CstNode& body, std::vector<const CstNode*>& goals,
                         std::vector<const Token*>& commas) {
    if (body.label == CstLabel::operator_notation_term && body.children.size() == 3) {
        const Token* op = token_at(body, 1);
        if (op != nullptr && op->kind == TokenKind::comma) {
            flatten_conjunction(*node_at(body, 0), goals, commas);
            commas.push_back(op);
            flatten_conjunction(*node_at(body, 2), goals, commas);
            return;
        }
    }
    goals.push_back(&body);
}

std::vector<ClauseInfo> collect_clauses(const CstNode& prolog_text) {
    std::vector<ClauseInfo> clauses;
    for (const CstChild& child : prolog_text.children) {
        auto* p = std::get_if<std::unique_ptr<CstNode>>(&child);
        if (p == nullptr) continue;
        const CstNode& node = **p;
        if (node.label != CstLabel::clause && node.label != CstLabel::directive) continue;
        ClauseInfo info;
        info.clause = &node;
        info.term = node_at(node, 0);
        info.end_token = token_at(node, 1);
        info.first = first_token(node);
        if (node.label == CstLabel::clause && info.term != nullptr &&
            info.term->label == CstLabel::operator_notation_term &&
            info.term->children.size() == 3) {
            const Token* op = token_at(*info.term, 1);
            if (op != nullptr && op->kind == TokenKind::name && op->text == ":-") {
                info.is_rule = true;
                info.rule_op = op;
                flatten_conjunction(*node_at(*info.term, 2), info.subgoals, info.body_commas);
            }
        }
        clauses.push_back(std::move(info));
    }
    return clauses;
}

// Commas acting as argument separators: compound argument lists, list
// items, dict pairs.
void collect_separator_commas(const CstNode& node, std::vector<std::pair<const Token*, const Token*>>& out) {
    bool separator_ctx = node.label == CstLabel::arg_list || node.label == CstLabel::list_term ||
                         node.label == CstLabel::dict_term;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (const Token* tok = std::get_if<Token>(&node.children[i])) {
            if (separator_ctx && tok->kind == TokenKind::comma) {
                // find the token that follows the comma
                const Token* next = nullptr;
                if (i + 1 < node.children.size()) {
                    if (const Token* nt = std::get_if<Token>(&node.children[i + 1]))
                        next = nt;
                    else
                        next = first_token(**std::get_if<std::unique_ptr<CstNode>>(&node.children[i + 1]));
                }
                out.emplace_back(tok, next);
            }
            continue;
        }
        collect_separator_commas(**std::get_if<std::unique_ptr<CstNode>>(&node.children[i]), out);
    }
}

int gcd_of(const std::vector<int>& values) {
    int g = 0;
    for (int v : values) g = std::gcd(g, v);
    return g;
}

class StyleChecker {
public:
    StyleChecker(const CstNode& cst, std::string_view source, const StyleOptions& opts,
                 const std::string& file)
        : cst_(cst), opts_(opts), file_(file), lines_(analyze_lines(source)) {
        clauses_ = collect_clauses(cst);
        inferred_.options = opts;
    }

    StyleCheckResult run() {
        check_indent();
        check_line_lengths();
        check_clause_sizes();
        check_arglist_commas();
        check_clause_newlines();
        check_rule_newlines();
        check_repeat_cut();
        check_trailing_whitespace();
        sort_diagnostics(diags_);
        return {std::move(diags_), std::move(inferred_)};
    }

private:
    const CstNode& cst_;
    const StyleOptions& opts_;
    const std::string& file_;
    std::vector<LineInfo> lines_;
    std::vector<ClauseInfo> clauses_;
    std::vector<Diagnostic> diags_;
    InferredOptions inferred_;

    void report(const char* rule, SourceSpan span, std::string message) {
        diags_.push_back({rule, Severity::warning, std::move(message), file_, span});
    }

    int line_indent_chars(int line_number) const {
        std::size_t idx = static_cast<std::size_t>(line_number - 1);
        return idx < lines_.size() ? lines_[idx].indent_chars : 0;
    }

    // cov_2_1: one indentation character per file; cov_2_2: every depth is a
    // multiple of the unit. Lines vote when leading whitespace precedes
    // content of any kind.
    void check_indent() {
        const auto& opt = opts_.indent;
        if (opt.mode == OptionMode::off) return;
        std::vector<int> space_depths;
        bool any_tab_line = false, any_mixed_line = false;
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            const LineInfo& line = lines_[i];
            if (line.blank || line.indent_chars == 0) continue;
            int line_no = static_cast<int>(i) + 1;
            SourceSpan span = line_span(line, line_no);
            span.byte_end = span.byte_start + static_cast<std::size_t>(line.indent_chars);
            span.col_end = line.indent_chars + 1;
            if (line.indent_spaces && line.indent_tabs) {
                any_mixed_line = true;
                if (opt.is_check())
                    report("cov_2_1", span, "line mixes spaces and tabs in its indentation");
                continue;
            }
            if (line.indent_tabs) {
                any_tab_line = true;
                if (opt.is_check() && !opt.value.tab)
                    report("cov_2_1", span, "line is indented with tabs in a space-indented file");
                continue;
            }
            space_depths.push_back(line.indent_chars);
            if (opt.is_check() && opt.value.tab) {
                report("cov_2_1", span, "line is indented with spaces in a tab-indented file");
            } else if (opt.is_check() && line.indent_chars % opt.value.width != 0) {
                report("cov_2_2", span,
                       "indentation of " + std::to_string(line.indent_chars) +
                           " is not a multiple of " + std::to_string(opt.value.width));
            }
        }
        if (opt.is_infer()) {
            if (any_mixed_line || (any_tab_line && !space_depths.empty())) {
                inferred_.mixed_indentation = true;
            } else if (!space_depths.empty()) {
                inferred_.options.indent =
                    StyleOption<IndentValue>::check({false, std::max(1, gcd_of(space_depths))});
            } else if (any_tab_line) {
                inferred_.options.indent = StyleOption<IndentValue>::check({true, 1});
            }
        }
    }

    void check_line_lengths() {
        const auto& opt = opts_.max_line_length;
        if (opt.mode == OptionMode::off) return;
        int max_seen = 0;
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            max_seen = std::max(max_seen, lines_[i].char_length);
            if (opt.is_check() && lines_[i].char_length > opt.value) {
                report("cov_2_3", line_span(lines_[i], static_cast<int>(i) + 1),
                       "line is " + std::to_string(lines_[i].char_length) +
                           " characters long (limit " + std::to_string(opt.value) + ")");
            }
        }
        if (opt.is_infer()) inferred_.options.max_line_length = StyleOption<int>::check(max_seen);
    }

    void check_clause_sizes() {
        const auto& sub = opts_.max_subgoals;
        const auto& rl = opts_.max_rule_lines;
        if (sub.mode == OptionMode::off && rl.mode == OptionMode::off) return;
        auto metrics = rule_metrics(cst_);
        int max_sub = 0, max_lines = 0;
        for (const ClauseMetrics& m : metrics) {
            max_sub = std::max(max_sub, m.subgoals);
            max_lines = std::max(max_lines, m.lines);
            if (sub.is_check() && m.subgoals > sub.value)
                report("cov_2_4", m.span,
                       "clause has " + std::to_string(m.subgoals) + " subgoals (limit " +
                           std::to_string(sub.value) + ")");
            if (rl.is_check() && m.lines > rl.value)
                report("cov_2_4", m.span,
                       "clause spans " + std::to_string(m.lines) + " lines (limit " +
                           std::to_string(rl.value) + ")");
        }
        if (!metrics.empty()) {
            if (sub.is_infer()) inferred_.options.max_subgoals = StyleOption<int>::check(max_sub);
            if (rl.is_infer()) inferred_.options.max_rule_lines = StyleOption<int>::check(max_lines);
        }
    }

    void check_arglist_commas() {
        const auto& opt = opts_.space_after_arglist_comma;
        if (opt.mode == OptionMode::off) return;
        std::vector<std::pair<const Token*, const Token*>> commas;
        collect_separator_commas(cst_, commas);
        int with_space = 0, without_space = 0;
        for (const auto& [comma, next] : commas) {
            bool spaced = next != nullptr && next->has_layout_before();
            spaced ? ++with_space : ++without_space;
            if (!opt.is_check()) continue;
            if (opt.value && !spaced)
                report("cov_2_5", comma->span, "missing space after argument-list comma");
            else if (!opt.value && spaced)
                report("cov_2_5", comma->span, "space after argument-list comma");
        }
        if (opt.is_infer() && !commas.empty()) {
            if (without_space == 0)
                inferred_.options.space_after_arglist_comma = StyleOption<bool>::check(true);
            else if (with_space == 0)
                inferred_.options.space_after_arglist_comma = StyleOption<bool>::check(false);
        }
    }

    void check_clause_newlines() {
        const auto& opt = opts_.newline_after_clause;
        if (opt.mode == OptionMode::off) return;
        int broken = 0, kept = 0, pairs = 0;
        for (std::size_t i = 0; i + 1 < clauses_.size(); ++i) {
            const Token* end = clauses_[i].end_token;
            const Token* next = clauses_[i + 1].first;
            if (end == nullptr || next == nullptr) continue;
            ++pairs;
            bool has_newline = next->span.line_start > end->span.line_end;
            has_newline ? ++kept : ++broken;
            if (opt.is_check() && opt.value && !has_newline)
                report("cov_2_6", end->span, "missing newline after clause");
        }
        if (opt.is_infer() && pairs > 0) {
            if (broken == 0)
                inferred_.options.newline_after_clause = StyleOption<bool>::check(true);
            else if (kept == 0)
                inferred_.options.newline_after_clause = StyleOption<bool>::check(false);
        }
    }

    void check_rule_newlines() {
        const auto& op_opt = opts_.newline_after_rule_op;
        const auto& sub_opt = opts_.newline_after_subgoal;
        if (op_opt.mode == OptionMode::off && sub_opt.mode == OptionMode::off) return;
        int op_kept = 0, op_broken = 0;
        int sub_kept = 0, sub_broken = 0;
        for (const ClauseInfo& clause : clauses_) {
            if (!clause.is_rule) continue;
            const CstNode* body = node_at(*clause.term, 2);
            const Token* first_goal_tok = body != nullptr ? first_token(*body) : nullptr;
            if (clause.rule_op != nullptr && first_goal_tok != nullptr) {
                bool nl = first_goal_tok->span.line_start > clause.rule_op->span.line_end;
                nl ? ++op_kept : ++op_broken;
                if (op_opt.is_check() && op_opt.value && !nl)
                    report("cov_2_7", clause.rule_op->span, "missing newline after ':-'");
            }
            for (std::size_t i = 0; i < clause.body_commas.size(); ++i) {
                const Token* comma = clause.body_commas[i];
                const Token* next_goal = i + 1 < clause.subgoals.size()
                                             ? first_token(*clause.subgoals[i + 1])
                                             : nullptr;
                if (next_goal == nullptr) continue;
                bool nl = next_goal->span.line_start > comma->span.line_end;
                nl ? ++sub_kept : ++sub_broken;
                if (sub_opt.is_check() && sub_opt.value && !nl)
                    report("cov_2_7", comma->span, "missing newline after subgoal");
            }
        }
        if (op_opt.is_infer() && op_kept + op_broken > 0) {
            if (op_broken == 0)
                inferred_.options.newline_after_rule_op = StyleOption<bool>::check(true);
            else if (op_kept == 0)
                inferred_.options.newline_after_rule_op = StyleOption<bool>::check(false);
        }
        if (sub_opt.is_infer() && sub_kept + sub_broken > 0) {
            if (sub_broken == 0)
                inferred_.options.newline_after_subgoal = StyleOption<bool>::check(true);
            else if (sub_kept == 0)
                inferred_.options.newline_after_subgoal = StyleOption<bool>::check(false);
        }
    }

    // Subgoals strictly between `repeat` and the next `!` must sit deeper
    // than the repeat line; a subgoal sharing the repeat line counts as a
    // violation.
    void check_repeat_cut() {
        const auto& opt = opts_.indent_between_repeat_cut;
        if (!(opt.is_check() && opt.value)) return;
        for (const ClauseInfo& clause : clauses_) {
            if (!clause.is_rule) continue;
            std::size_t i = 0;
            while (i < clause.subgoals.size()) {
                if (!is_atom_token_term(*clause.subgoals[i], "repeat")) {
                    ++i;
                    continue;
                }
                const Token* repeat_tok = first_token(*clause.subgoals[i]);
                int repeat_line = repeat_tok->span.line_start;
                int repeat_depth = line_indent_chars(repeat_line);
                std::size_t j = i + 1;
                for (; j < clause.subgoals.size(); ++j) {
                    if (is_atom_token_term(*clause.subgoals[j], "!")) break;
                    const Token* goal_tok = first_token(*clause.subgoals[j]);
                    if (goal_tok == nullptr) continue;
                    int goal_line = goal_tok->span.line_start;
                    if (goal_line == repeat_line || line_indent_chars(goal_line) <= repeat_depth)
                        report("cov_2_14", goal_tok->span,
                               "subgoal between repeat and ! is not indented deeper than repeat");
                }
                i = j + 1;
            }
        }
    }

    void check_trailing_whitespace() {
        const auto& opt = opts_.no_trailing_whitespace;
        if (opt.mode == OptionMode::off) return;
        bool any = false;
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            const LineInfo& line = lines_[i];
            if (line.trailing_ws == 0) continue;
            any = true;
            if (opt.is_check() && opt.value) {
                SourceSpan span = line_span(line, static_cast<int>(i) + 1);
                span.byte_start = span.byte_end - static_cast<std::size_t>(line.trailing_ws);
                span.col_start = span.col_end - line.trailing_ws;
                report("style.trailing_whitespace", span, "trailing whitespace");
            }
        }
        if (opt.is_infer() && !any)
            inferred_.options.no_trailing_whitespace = StyleOption<bool>::check(true);
    }
};

}  // namespace

StyleCheckResult check_style(const CstNode& cst, std::string_view source,
                             const StyleOptions& options, const std::string& file) {
    return StyleChecker(cst, source, options, file).run();
}

std::vector<ClauseMetrics> rule_metrics(const CstNode& cst) {
    std::vector<ClauseMetrics> metrics;
    for (const ClauseInfo& clause : collect_clauses(cst)) {
        ClauseMetrics m;
        m.subgoals = static_cast<int>(clause.subgoals.size());
        if (clause.first != nullptr && clause.end_token != nullptr) {
            m.lines = clause.end_token->span.line_end - clause.first->span.line_start + 1;
            m.span = join_spans(clause.first->span, clause.end_token->span);
        }
        metrics.push_back(m);
    }
    return metrics;
}

SerializeOptions style_to_serialize_options(const StyleOptions& options) {
    SerializeOptions out;
    if (options.indent.is_check()) {
        out.indent_with_tab = options.indent.value.tab;
        out.indent_width = options.indent.value.width;
    }
    if (options.space_after_arglist_comma.is_check())
        out.space_after_arglist_comma = options.space_after_arglist_comma.value;
    if (options.newline_after_clause.is_check())
        out.newline_after_clause = options.newline_after_clause.value;
    if (options.newline_after_rule_op.is_check())
        out.newline_after_rule_op = options.newline_after_rule_op.value;
    if (options.newline_after_subgoal.is_check())
        out.newline_after_subgoal = options.newline_after_subgoal.value;
    if (options.indent_between_repeat_cut.is_check())
        out.indent_between_repeat_cut = options.indent_between_repeat_cut.value;
    return out;
}

bool style_has_infer(const StyleOptions& options) {
    return options.indent.is_infer() || options.max_line_length.is_infer() ||
           options.max_subgoals.is_infer() || options.max_rule_lines.is_infer() ||
           options.space_after_arglist_comma.is_infer() ||
           options.newline_after_clause.is_infer() || options.newline_after_rule_op.is_infer() ||
           options.newline_after_subgoal.is_infer() ||
           options.indent_between_repeat_cut.is_infer() ||
           options.no_trailing_whitespace.is_infer();
}

}  // namespace prolint
