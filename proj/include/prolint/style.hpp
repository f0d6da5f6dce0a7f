#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prolint/cst.hpp"
#include "prolint/diagnostic.hpp"
#include "prolint/serialize.hpp"

namespace prolint {

enum class OptionMode { off, check, infer };

template <typename T>
struct StyleOption {
    OptionMode mode = OptionMode::off;
    T value{};

    static StyleOption off() { return {}; }
    static StyleOption check(T v) { return {OptionMode::check, std::move(v)}; }
    static StyleOption infer() { return {OptionMode::infer, T{}}; }

    bool is_check() const { return mode == OptionMode::check; }
    bool is_infer() const { return mode == OptionMode::infer; }
};

struct IndentValue {
    bool tab = false;
    int width = 4;  // ignored when tab

    bool operator==(const IndentValue&) const = default;
};

// Layout rules. Boolean options: check(true) enforces the positive rule;
// check(false) enforces the opposite for the spacing/newline preferences and
// is a no-op for the hygiene rules (trailing whitespace, repeat/cut indent).
struct StyleOptions {
    StyleOption<IndentValue> indent;               // cov_2_1 (charset) + cov_2_2 (unit)
    StyleOption<int> max_line_length;              // cov_2_3
    StyleOption<int> max_subgoals;                 // cov_2_4
    StyleOption<int> max_rule_lines;               // cov_2_4
    StyleOption<bool> space_after_arglist_comma;   // cov_2_5
    StyleOption<bool> newline_after_clause;        // cov_2_6
    StyleOption<bool> newline_after_rule_op;       // cov_2_7
    StyleOption<bool> newline_after_subgoal;       // cov_2_7
    StyleOption<bool> indent_between_repeat_cut;   // cov_2_14
    StyleOption<bool> no_trailing_whitespace;      // style.trailing_whitespace
};

// StyleOptions with every resolvable infer slot bound to the observed value
// (mode becomes check). Slots stay infer when the file shows no occurrences
// or the observations conflict; a conflicting indent is additionally
// reported via mixed_indentation.
struct InferredOptions {
    StyleOptions options;
    bool mixed_indentation = false;
};

struct StyleCheckResult {
    std::vector<Diagnostic> diagnostics;
    InferredOptions inferred;
};

StyleCheckResult check_style(const CstNode& cst, std::string_view source,
                             const StyleOptions& options, const std::string& file);

struct ClauseMetrics {
    int subgoals = 0;   // flattened top-level conjunction; facts and directives: 0
    int lines = 0;      // physical lines spanned, first token through end token
    SourceSpan span;
};

std::vector<ClauseMetrics> rule_metrics(const CstNode& cst);

// Converts concrete check values into writer settings; infer slots are not
// allowed (the caller rejects them first), off slots use the defaults.
SerializeOptions style_to_serialize_options(const StyleOptions& options);
bool style_has_infer(const StyleOptions& options);

}  // namespace prolint
