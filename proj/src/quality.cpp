#include "prolint/quality.hpp"

#include <map>
#include <regex>

namespace prolint {

const char* word_style_name(WordStyle style) {
    switch (style) {
        case WordStyle::underscore: return "underscore";
        case WordStyle::camel_case: return "camel_case";
        case WordStyle::single_word: return "single_word";
        case WordStyle::mixed: return "mixed";
    }
    return "?";
}

namespace {

bool ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
bool ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool ascii_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<std::string> split_words(std::string_view name) {
    std::vector<std::string> words;
    std::string current;
    for (std::size_t i = 0; i < name.size(); ++i) {
        char c = name[i];
        if (c == '_') {
            if (!current.empty()) words.push_back(std::move(current));
            current.clear();
            continue;
        }
        if (ascii_upper(c) && i > 0 && (ascii_lower(name[i - 1]) || ascii_digit(name[i - 1]))) {
            if (!current.empty()) words.push_back(std::move(current));
            current.clear();
        }
        current.push_back(c);
    }
    if (!current.empty()) words.push_back(std::move(current));
    return words;
}

bool strict_underscore(std::string_view name) {
    // lowercase words joined by single underscores
    if (name.empty() || !ascii_lower(name.front())) return false;
    bool seen_underscore = false;
    bool prev_underscore = false;
    for (char c : name) {
        if (c == '_') {
            if (prev_underscore) return false;
            seen_underscore = true;
            prev_underscore = true;
            continue;
        }
        prev_underscore = false;
        if (ascii_upper(c)) return false;
    }
    return seen_underscore && !prev_underscore;
}

bool has_interior_case_change(std::string_view name) {
    for (std::size_t i = 1; i < name.size(); ++i)
        if (ascii_upper(name[i]) && (ascii_lower(name[i - 1]) || ascii_digit(name[i - 1])))
            return true;
    return false;
}

}  // namespace

IdentifierWords identifier_words(std::string_view name) {
    IdentifierWords result;
    result.words = split_words(name);
    bool has_underscore = name.find('_') != std::string_view::npos;
    if (strict_underscore(name))
        result.style = WordStyle::underscore;
    else if (!has_underscore && has_interior_case_change(name))
        result.style = WordStyle::camel_case;
    else if (!has_underscore)
        result.style = WordStyle::single_word;
    else
        result.style = WordStyle::mixed;
    return result;
}

WordStyle variable_word_style(std::string_view name) {
    bool has_underscore = name.find('_') != std::string_view::npos;
    if (!has_underscore)
        return has_interior_case_change(name) ? WordStyle::camel_case : WordStyle::single_word;
    // words themselves may start capitalized; an interior change within a
    // word still marks camel casing
    std::size_t word_start = 0;
    bool any_word = false;
    for (std::size_t i = 0; i <= name.size(); ++i) {
        if (i == name.size() || name[i] == '_') {
            if (i > word_start) {
                any_word = true;
                if (has_interior_case_change(name.substr(word_start, i - word_start)))
                    return WordStyle::mixed;
            } else if (i < name.size() && i != 0) {
                return WordStyle::mixed;  // empty segment from doubled underscore
            }
            word_start = i + 1;
        }
    }
    return any_word ? WordStyle::underscore : WordStyle::mixed;
}

namespace {

struct NamedOccurrence {
    std::string name;
    WordStyle style;
    SourceSpan span;
};

void walk_variables(const AstNode& node, const AstWithOrigin& ast,
                    std::map<std::string, NamedOccurrence>& out) {
    if (node.kind == AstKind::variable) {
        const std::string& name = node.name;
        if (!name.empty() && name.front() != '_' && !out.count(name))
            out[name] = {name, variable_word_style(name), ast.span_of(node)};
    }
    for (const auto& child : node.children) walk_variables(*child, ast, out);
    if (node.tail) walk_variables(*node.tail, ast, out);
}

const AstNode* clause_head(const AstNode& clause) {
    if (clause.kind == AstKind::rule || clause.kind == AstKind::fact)
        return clause.children.empty() ? nullptr : clause.children[0].get();
    return nullptr;
}

std::string head_functor(const AstNode& head) {
    switch (head.kind) {
        case AstKind::compound:
        case AstKind::atom:
        case AstKind::infix:
        case AstKind::prefix:
        case AstKind::postfix:
            return head.name;
        default:
            return {};
    }
}

void collect_heads(const AstNode& program, const AstWithOrigin& ast,
                   std::map<std::string, NamedOccurrence>& out) {
    for (const auto& clause : program.children) {
        const AstNode* head = clause_head(*clause);
        if (head == nullptr) continue;
        std::string name = head_functor(*head);
        if (name.empty() || out.count(name)) continue;
        out[name] = {name, identifier_words(name).style, ast.span_of(*head)};
    }
}

// consistent mode: the majority style among multi-word identifiers wins and
// the minority is flagged; a tie flags every multi-word identifier.
void check_consistent(const std::map<std::string, NamedOccurrence>& names, const char* rule,
                      const char* what, const std::string& file,
                      std::vector<Diagnostic>& diags) {
    int underscore = 0, camel = 0;
    for (const auto& [name, occ] : names) {
        if (occ.style == WordStyle::underscore) ++underscore;
        if (occ.style == WordStyle::camel_case) ++camel;
    }
    bool tie = underscore == camel;
    WordStyle majority = underscore > camel ? WordStyle::underscore : WordStyle::camel_case;
    for (const auto& [name, occ] : names) {
        if (occ.style == WordStyle::single_word) continue;
        if (tie) {
            diags.push_back({rule, Severity::warning,
                             std::string(what) + " '" + name +
                                 "' has no dominant naming style to follow",
                             file, occ.span});
        } else if (occ.style != majority) {
            diags.push_back({rule, Severity::warning,
                             std::string(what) + " '" + name + "' is " +
                                 word_style_name(occ.style) + "-styled where " +
                                 word_style_name(majority) + " dominates",
                             file, occ.span});
        }
    }
}

void check_fixed_style(const std::map<std::string, NamedOccurrence>& names, WordStyle wanted,
                       const char* rule, const char* what, const std::string& file,
                       std::vector<Diagnostic>& diags) {
    for (const auto& [name, occ] : names) {
        if (occ.style == WordStyle::single_word || occ.style == wanted) continue;
        diags.push_back({rule, Severity::warning,
                         std::string(what) + " '" + name + "' does not follow " +
                             word_style_name(wanted) + " style",
                         file, occ.span});
    }
}

}  // namespace

std::vector<Diagnostic> check_quality(const AstWithOrigin& ast, const QualityOptions& options,
                                      const std::string& file) {
    std::vector<Diagnostic> diags;
    if (ast.ast == nullptr) return diags;

    if (options.predicate_naming_style) {
        std::map<std::string, NamedOccurrence> heads;
        collect_heads(*ast.ast, ast, heads);
        switch (*options.predicate_naming_style) {
            case NamingStyle::underscore:
                check_fixed_style(heads, WordStyle::underscore, "cov_3_1", "predicate", file, diags);
                break;
            case NamingStyle::camel_case:
                check_fixed_style(heads, WordStyle::camel_case, "cov_3_1", "predicate", file, diags);
                break;
            case NamingStyle::consistent:
                check_consistent(heads, "cov_3_1", "predicate", file, diags);
                break;
        }
    }

    if (options.variable_naming_style) {
        std::map<std::string, NamedOccurrence> vars;
        walk_variables(*ast.ast, ast, vars);
        switch (*options.variable_naming_style) {
            case NamingStyle::underscore:
                check_fixed_style(vars, WordStyle::underscore, "cov_3_4", "variable", file, diags);
                break;
            case NamingStyle::camel_case:
                check_fixed_style(vars, WordStyle::camel_case, "cov_3_4", "variable", file, diags);
                break;
            case NamingStyle::consistent:
                check_consistent(vars, "cov_3_4", "variable", file, diags);
                break;
        }
    }

    if (options.naming_convention_3_12) {
        std::regex pattern(options.pattern_3_12);
        std::map<std::string, NamedOccurrence> heads;
        collect_heads(*ast.ast, ast, heads);
        for (const auto& [name, occ] : heads) {
            if (!std::regex_match(name, pattern))
                diags.push_back({"cov_3_12", Severity::warning,
                                 "predicate name '" + name + "' does not match the configured pattern",
                                 file, occ.span});
        }
    }

    sort_diagnostics(diags);
    return diags;
}

}  // namespace prolint
