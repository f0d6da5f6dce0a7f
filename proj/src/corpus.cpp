#include "prolint/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "prolint/ast.hpp"
#include "prolint/style.hpp"

namespace prolint {

const char* indentation_class_name(IndentationClass c) {
    switch (c) {
        case IndentationClass::no_indentation: return "no_indentation";
        case IndentationClass::spaces_only: return "spaces_only";
        case IndentationClass::tabs_only: return "tabs_only";
        case IndentationClass::mixed: return "mixed";
    }
    return "?";
}

const char* feature_name(FeatureId id) {
    switch (id) {
        case FeatureId::shebang: return "shebang";
        case FeatureId::digit_groups: return "digit_groups";
        case FeatureId::dicts: return "dicts";
        case FeatureId::unicode_character_escape: return "unicode_character_escape";
        case FeatureId::missing_closing_backslash: return "missing_closing_backslash";
        case FeatureId::single_quote_char_constant: return "single_quote_char_constant";
        case FeatureId::zero_arguments_compound: return "zero_arguments_compound";
        case FeatureId::tab_in_quotes: return "tab_in_quotes";
        case FeatureId::integer_exponential_notation: return "integer_exponential_notation";
    }
    return "?";
}

namespace {

bool quoted_token(const Token& tok) {
    if (tok.kind == TokenKind::double_quoted || tok.kind == TokenKind::back_quoted) return true;
    return tok.kind == TokenKind::name && !tok.text.empty() && tok.text.front() == '\'';
}

bool is_hex(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

bool is_octal(char c) { return c >= '0' && c <= '7'; }

// \uXXXX / \UXXXXXXXX occurrences and numeric escapes without the closing
// backslash inside one quoted token text.
void scan_quoted_escapes(const std::string& text, long& unicode, long& missing_backslash) {
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != '\\') continue;
        char e = text[i + 1];
        if (e == '\\') {  // escaped backslash, skip both
            ++i;
            continue;
        }
        if (e == 'u' || e == 'U') {
            std::size_t need = e == 'u' ? 4 : 8;
            std::size_t k = i + 2;
            std::size_t digits = 0;
            while (k < text.size() && digits < need && is_hex(text[k])) ++k, ++digits;
            if (digits == need) {
                ++unicode;
                i = k - 1;
            }
            continue;
        }
        if (e == 'x' || is_octal(e)) {
            std::size_t k = e == 'x' ? i + 2 : i + 1;
            std::size_t digits = 0;
            while (k < text.size() && (e == 'x' ? is_hex(text[k]) : is_octal(text[k]))) ++k, ++digits;
            if (digits > 0) {
                if (k < text.size() && text[k] == '\\')
                    i = k;  // properly closed
                else {
                    ++missing_backslash;
                    i = k - 1;
                }
            }
            continue;
        }
    }
}

}  // namespace

FeatureCounts detect_features(const LexResult& lexed) {
    FeatureCounts counts{};
    auto at = [](FeatureCounts& c, FeatureId id) -> long& {
        return c[static_cast<std::size_t>(id)];
    };
    auto layout_scan = [&](const std::vector<LayoutItem>& items) {
        for (const LayoutItem& item : items)
            if (item.kind == LayoutKind::shebang) ++at(counts, FeatureId::shebang);
    };
    for (std::size_t i = 0; i < lexed.tokens.size(); ++i) {
        const Token& tok = lexed.tokens[i];
        layout_scan(tok.layout_before);
        switch (tok.kind) {
            case TokenKind::integer:
                if (tok.text.find('_') != std::string::npos)
                    ++at(counts, FeatureId::digit_groups);
                break;
            case TokenKind::floating:
                if (tok.text.find('.') == std::string::npos)
                    ++at(counts, FeatureId::integer_exponential_notation);
                break;
            case TokenKind::dict_open:
                ++at(counts, FeatureId::dicts);
                break;
            case TokenKind::char_code_constant:
                if (tok.text == "0''") ++at(counts, FeatureId::single_quote_char_constant);
                break;
            case TokenKind::open_ct:
                if (i + 1 < lexed.tokens.size() &&
                    lexed.tokens[i + 1].kind == TokenKind::close_paren && i > 0 &&
                    lexed.tokens[i - 1].kind == TokenKind::name)
                    ++at(counts, FeatureId::zero_arguments_compound);
                break;
            default:
                break;
        }
        if (quoted_token(tok)) {
            long tabs = static_cast<long>(std::count(tok.text.begin(), tok.text.end(), '\t'));
            at(counts, FeatureId::tab_in_quotes) += tabs;
            scan_quoted_escapes(tok.text, at(counts, FeatureId::unicode_character_escape),
                                at(counts, FeatureId::missing_closing_backslash));
        }
    }
    layout_scan(lexed.trailing);
    return counts;
}

IndentationClass classify_indentation(std::string_view source) {
    bool spaces = false, tabs = false, intra_mixed = false;
    std::size_t start = 0;
    auto look = [&](std::string_view line) {
        bool s = false, t = false;
        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            (line[i] == ' ' ? s : t) = true;
            ++i;
        }
        if (i == line.size() || i == 0) return;  // blank or unindented
        if (s && t) intra_mixed = true;
        spaces |= s;
        tabs |= t;
    };
    for (std::size_t i = 0; i < source.size(); ++i) {
        if (source[i] == '\n') {
            look(source.substr(start, i - start));
            start = i + 1;
        }
    }
    if (start < source.size()) look(source.substr(start));
    if (intra_mixed || (spaces && tabs)) return IndentationClass::mixed;
    if (spaces) return IndentationClass::spaces_only;
    if (tabs) return IndentationClass::tabs_only;
    return IndentationClass::no_indentation;
}

namespace {

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

long count_lines(std::string_view text) {
    if (text.empty()) return 0;
    long n = static_cast<long>(std::count(text.begin(), text.end(), '\n'));
    if (text.back() != '\n') ++n;
    return n;
}

// op(P, Spec, Name-or-list) recognized over raw tokens, one clause at a time.
struct ScannedOp {
    int priority;
    OpSpecifier spec;
    std::vector<std::string> names;
};

std::optional<ScannedOp> scan_op_clause(std::span<const Token> toks,
                                        const DialectOptions& dialect) {
    std::size_t i = 0;
    auto want = [&](auto pred) -> const Token* {
        if (i >= toks.size() || !pred(toks[i])) return nullptr;
        return &toks[i++];
    };
    if (!want([](const Token& t) { return t.is_name(":-"); })) return std::nullopt;
    if (!want([](const Token& t) { return t.kind == TokenKind::name && t.text == "op"; }))
        return std::nullopt;
    if (!want([](const Token& t) { return t.kind == TokenKind::open_ct; })) return std::nullopt;
    ScannedOp op;
    bool negative = false;
    if (want([](const Token& t) { return t.is_name("-"); })) negative = true;
    const Token* prio = want([](const Token& t) { return t.kind == TokenKind::integer; });
    if (prio == nullptr) return std::nullopt;
    op.priority = static_cast<int>(integer_token_value(*prio, dialect));
    if (negative) op.priority = -op.priority;
    if (!want([](const Token& t) { return t.kind == TokenKind::comma; })) return std::nullopt;
    const Token* spec = want([](const Token& t) { return t.kind == TokenKind::name; });
    if (spec == nullptr) return std::nullopt;
    auto parsed_spec = parse_specifier(name_token_value(*spec, dialect));
    if (!parsed_spec) return std::nullopt;
    op.spec = *parsed_spec;
    if (!want([](const Token& t) { return t.kind == TokenKind::comma; })) return std::nullopt;
    if (want([](const Token& t) { return t.kind == TokenKind::open_list; })) {
        while (true) {
            const Token* name = want([](const Token& t) { return t.kind == TokenKind::name; });
            if (name == nullptr) return std::nullopt;
            op.names.push_back(name_token_value(*name, dialect));
            if (want([](const Token& t) { return t.kind == TokenKind::comma; })) continue;
            break;
        }
        if (!want([](const Token& t) { return t.kind == TokenKind::close_list; }))
            return std::nullopt;
    } else {
        const Token* name = want([](const Token& t) { return t.kind == TokenKind::name; });
        if (name == nullptr) return std::nullopt;
        op.names.push_back(name_token_value(*name, dialect));
    }
    if (!want([](const Token& t) { return t.kind == TokenKind::close_paren; }))
        return std::nullopt;
    if (!want([](const Token& t) { return t.kind == TokenKind::end; })) return std::nullopt;
    return op;
}

}  // namespace

OperatorCollection collect_operators(const std::vector<std::filesystem::path>& files,
                                     const OperatorTable& base, const DialectOptions& dialect) {
    OperatorCollection result{base, {}};
    // slot -> (priority, spec) of the directive that defined it last
    std::map<std::pair<std::string, bool>, OpDef> defined;
    for (const auto& file : files) {
        auto text = read_file(file);
        if (!text) {
            result.warnings.push_back("cannot read " + file.string());
            continue;
        }
        LexResult lexed = tokenize(*text, dialect);
        std::span<const Token> toks(lexed.tokens);
        std::size_t clause_start = 0;
        for (std::size_t i = 0; i < toks.size(); ++i) {
            if (toks[i].kind != TokenKind::end) continue;
            auto clause = toks.subspan(clause_start, i - clause_start + 1);
            clause_start = i + 1;
            auto op = scan_op_clause(clause, dialect);
            if (!op) continue;
            for (const std::string& name : op->names) {
                bool prefix_slot = is_prefix_specifier(op->spec);
                auto key = std::make_pair(name, prefix_slot);
                auto it = defined.find(key);
                if (it != defined.end() && (it->second.priority != op->priority ||
                                            it->second.specifier != op->spec)) {
                    result.warnings.push_back(
                        "conflicting op definition for '" + name + "' (" +
                        std::to_string(it->second.priority) + " " +
                        specifier_name(it->second.specifier) + " vs " +
                        std::to_string(op->priority) + " " + specifier_name(op->spec) +
                        "), last definition wins");
                }
                OperatorTable next;
                if (auto err = result.table.apply(op->priority, op->spec, name, next)) {
                    result.warnings.push_back("op(" + std::to_string(op->priority) + ", " +
                                              specifier_name(op->spec) + ", " + name +
                                              ") rejected: " + err->message);
                    continue;
                }
                result.table = std::move(next);
                defined[key] = OpDef{name, op->priority, op->spec};
            }
        }
    }
    return result;
}

FileStats analyze_source(std::string source, const std::string& path,
                         const OperatorTable& table, const DialectOptions& dialect,
                         const Limits& limits) {
    FileStats stats;
    stats.path = path;
    if (source.size() > limits.max_bytes) {
        stats.parsed = "skipped";
        stats.skip_reason = "too_large";
        return stats;
    }
    stats.line_count = count_lines(source);
    if (stats.line_count > limits.max_lines) {
        stats.parsed = "skipped";
        stats.skip_reason = "too_long";
        return stats;
    }

    auto now = std::chrono::steady_clock::now();
    bool inject = !limits.inject_timeout_substr.empty() &&
                  path.find(limits.inject_timeout_substr) != std::string::npos;
    Deadline deadline =
        inject ? now - std::chrono::seconds(1)
               : now + std::chrono::microseconds(
                           static_cast<long long>(limits.timeout_seconds * 1e6));

    LexResult lexed = tokenize(source, dialect);
    ParseOutcome outcome = parse_program(lexed, table, dialect, deadline);
    if (outcome.timed_out) {
        FileStats fresh;  // partial results are dropped
        fresh.path = path;
        fresh.line_count = stats.line_count;
        fresh.parsed = "skipped";
        fresh.skip_reason = "timeout";
        return fresh;
    }

    stats.parsed = lexed.ok() && outcome.errors.empty() ? "yes" : "no";
    stats.indentation_class = classify_indentation(source);
    stats.feature_counts = detect_features(lexed);

    long rule_count = 0;
    auto metrics = rule_metrics(*outcome.cst);
    stats.clause_count = static_cast<long>(metrics.size());
    for (const ClauseMetrics& m : metrics) {
        stats.max_subgoals = std::max<long>(stats.max_subgoals, m.subgoals);
        stats.max_rule_lines = std::max<long>(stats.max_rule_lines, m.lines);
        if (m.subgoals > 0) ++rule_count;
    }
    stats.fact_only = stats.parsed == "yes" && stats.clause_count > 0 && rule_count == 0;

    StyleOptions opts;
    opts.max_line_length = StyleOption<int>::check(limits.long_line_limit);
    opts.space_after_arglist_comma = StyleOption<bool>::check(true);
    opts.newline_after_clause = StyleOption<bool>::check(true);
    opts.newline_after_rule_op = StyleOption<bool>::check(true);
    opts.newline_after_subgoal = StyleOption<bool>::check(true);
    opts.no_trailing_whitespace = StyleOption<bool>::check(true);
    StyleCheckResult checked = check_style(*outcome.cst, source, opts, path);
    for (const Diagnostic& d : checked.diagnostics) {
        if (d.rule_id == "cov_2_3") ++stats.long_line_count;
        else if (d.rule_id == "cov_2_5") ++stats.missing_space_after_comma_count;
        else if (d.rule_id == "cov_2_6") ++stats.missing_newline_after_clause_count;
        else if (d.rule_id == "cov_2_7" && d.message.find("':-'") != std::string::npos)
            ++stats.missing_newline_after_rule_op_count;
        else if (d.rule_id == "cov_2_7") ++stats.missing_newline_after_subgoal_count;
        else if (d.rule_id == "style.trailing_whitespace") ++stats.trailing_whitespace_line_count;
    }
    return stats;
}

FileStats analyze_file(const std::filesystem::path& file, const std::string& reported_path,
                       const OperatorTable& table, const DialectOptions& dialect,
                       const Limits& limits) {
    std::error_code ec;
    auto size = std::filesystem::file_size(file, ec);
    if (!ec && size > limits.max_bytes) {
        FileStats stats;
        stats.path = reported_path;
        stats.parsed = "skipped";
        stats.skip_reason = "too_large";
        return stats;
    }
    auto text = read_file(file);
    if (!text) {
        FileStats stats;
        stats.path = reported_path;
        stats.parsed = "no";
        return stats;
    }
    return analyze_source(std::move(*text), reported_path, table, dialect, limits);
}

CorpusReport aggregate(std::vector<FileStats> stats, long packages_total, const Limits& limits) {
    CorpusReport report;
    report.limits = limits;
    std::sort(stats.begin(), stats.end(),
              [](const FileStats& a, const FileStats& b) { return a.path < b.path; });

    std::map<std::string, PackageRollup> packages;
    std::map<std::string, std::array<bool, kFeatureCount>> package_features;
    for (const FileStats& f : stats) {
        ++report.files_total;
        PackageRollup& pkg = packages[f.package];
        pkg.name = f.package;
        ++pkg.files;
        pkg.lines += f.line_count;
        pkg.clauses += f.clause_count;
        if (f.parsed == "yes") {
            ++report.files_parsed;
            ++pkg.parsed;
        } else if (f.parsed == "skipped") {
            ++report.files_skipped;
            ++pkg.skipped;
        } else {
            ++report.files_failed;
            ++pkg.failed;
        }
        if (f.parsed != "skipped") {
            ++report.indentation_counts[static_cast<std::size_t>(f.indentation_class)];
            if (f.clause_count > 0) {
                ++report.subgoal_histogram[static_cast<std::size_t>(
                    std::min<long>(f.max_subgoals, 25))];
                ++report.rule_lines_histogram[static_cast<std::size_t>(
                    std::min<long>(f.max_rule_lines, 25))];
            }
        }
        auto& present = package_features[f.package];
        for (std::size_t i = 0; i < kFeatureCount; ++i) {
            report.features[i].occurrences += f.feature_counts[i];
            if (f.feature_counts[i] > 0) present[i] = true;
        }
    }
    for (const auto& [name, present] : package_features)
        for (std::size_t i = 0; i < kFeatureCount; ++i)
            if (present[i]) ++report.features[i].packages_present;

    for (auto& [name, pkg] : packages) report.packages.push_back(pkg);
    report.packages_total = packages_total > 0 ? packages_total
                                               : static_cast<long>(report.packages.size());
    long attempted = report.files_total - report.files_skipped;
    report.parse_success_ratio =
        attempted > 0 ? static_cast<double>(report.files_parsed) / static_cast<double>(attempted)
                      : 0.0;
    report.files = std::move(stats);
    return report;
}

namespace {

bool prolog_extension(const std::filesystem::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".pl" || ext == ".plt" || ext == ".pro" || ext == ".prolog";
}

}  // namespace

CorpusReport run_corpus(const std::filesystem::path& root, const OperatorTable& base,
                        const DialectOptions& dialect, const Limits& limits, int jobs) {
    struct Entry {
        std::filesystem::path file;
        std::string reported;
        std::string package;
    };
    std::vector<Entry> entries;
    std::map<std::string, std::vector<std::filesystem::path>> package_files;

    std::error_code ec;
    for (auto it = std::filesystem::recursive_directory_iterator(root, ec);
         it != std::filesystem::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) break;
        if (!it->is_regular_file(ec) || !prolog_extension(it->path())) continue;
        auto rel = std::filesystem::relative(it->path(), root, ec);
        std::string reported = rel.generic_string();
        std::string package = rel.has_parent_path() ? rel.begin()->string() : ".";
        entries.push_back({it->path(), reported, package});
        package_files[package].push_back(it->path());
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.reported < b.reported; });

    // sequential per-package operator pre-pass, lexicographic file order
    std::map<std::string, OperatorTable> package_tables;
    std::vector<std::string> warnings;
    for (auto& [package, files] : package_files) {
        std::sort(files.begin(), files.end());
        OperatorCollection collected = collect_operators(files, base, dialect);
        package_tables.emplace(package, std::move(collected.table));
        for (std::string& w : collected.warnings)
            warnings.push_back(package + ": " + std::move(w));
    }

    std::vector<FileStats> stats(entries.size());
    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min<int>(workers, static_cast<int>(entries.size()) > 0
                                         ? static_cast<int>(entries.size())
                                         : 1);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= entries.size()) break;
            const Entry& e = entries[i];
            stats[i] = analyze_file(e.file, e.reported, package_tables.at(e.package), dialect,
                                    limits);
            stats[i].package = e.package;
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    CorpusReport report =
        aggregate(std::move(stats), static_cast<long>(package_files.size()), limits);
    report.operator_warnings = std::move(warnings);
    return report;
}

// --- rendering ---------------------------------------------------------------

namespace {

using ordered_json = nlohmann::ordered_json;

double rounded_share(long count, long total) {
    if (total == 0) return 0.0;
    return std::round(static_cast<double>(count) * 1000.0 / static_cast<double>(total)) / 10.0;
}

}  // namespace

std::string report_to_json(const CorpusReport& report) {
    ordered_json j;
    j["report_version"] = 1;
    j["limits"] = {{"timeout_seconds", report.limits.timeout_seconds},
                   {"max_bytes", report.limits.max_bytes},
                   {"max_lines", report.limits.max_lines},
                   {"long_line_limit", report.limits.long_line_limit}};
    j["totals"] = {{"files", report.files_total},
                   {"parsed", report.files_parsed},
                   {"failed", report.files_failed},
                   {"skipped", report.files_skipped},
                   {"packages", report.packages_total},
                   {"parse_success_ratio",
                    std::round(report.parse_success_ratio * 10000.0) / 10000.0}};
    j["packages"] = ordered_json::array();
    for (const PackageRollup& pkg : report.packages) {
        j["packages"].push_back({{"name", pkg.name},
                                 {"files", pkg.files},
                                 {"parsed", pkg.parsed},
                                 {"failed", pkg.failed},
                                 {"skipped", pkg.skipped},
                                 {"clauses", pkg.clauses},
                                 {"lines", pkg.lines}});
    }
    j["files"] = ordered_json::array();
    for (const FileStats& f : report.files) {
        ordered_json jf = {{"path", f.path},
                           {"package", f.package},
                           {"parsed", f.parsed},
                           {"skip_reason", f.skip_reason},
                           {"line_count", f.line_count},
                           {"clause_count", f.clause_count},
                           {"fact_only", f.fact_only},
                           {"max_subgoals", f.max_subgoals},
                           {"max_rule_lines", f.max_rule_lines},
                           {"long_line_count", f.long_line_count},
                           {"indentation_class", indentation_class_name(f.indentation_class)},
                           {"missing_space_after_comma", f.missing_space_after_comma_count},
                           {"trailing_whitespace_lines", f.trailing_whitespace_line_count},
                           {"missing_newline_after_rule_op", f.missing_newline_after_rule_op_count},
                           {"missing_newline_after_subgoal", f.missing_newline_after_subgoal_count},
                           {"missing_newline_after_clause", f.missing_newline_after_clause_count}};
        ordered_json feats;
        for (std::size_t i = 0; i < kFeatureCount; ++i)
            feats[feature_name(static_cast<FeatureId>(i))] = f.feature_counts[i];
        jf["features"] = feats;
        j["files"].push_back(jf);
    }
    j["histograms"] = {{"max_subgoals", report.subgoal_histogram},
                       {"max_rule_lines", report.rule_lines_histogram}};
    long indent_total = 0;
    for (long c : report.indentation_counts) indent_total += c;
    ordered_json indent;
    ordered_json shares;
    for (std::size_t i = 0; i < 4; ++i) {
        const char* name = indentation_class_name(static_cast<IndentationClass>(i));
        indent[name] = report.indentation_counts[i];
        shares[name] = rounded_share(report.indentation_counts[i], indent_total);
    }
    indent["shares"] = shares;
    j["indentation"] = indent;
    ordered_json feats;
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
        feats[feature_name(static_cast<FeatureId>(i))] = {
            {"occurrences", report.features[i].occurrences},
            {"packages", report.features[i].packages_present},
            {"packages_total", report.packages_total}};
    }
    j["features"] = feats;
    if (!report.operator_warnings.empty()) j["operator_warnings"] = report.operator_warnings;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const CorpusReport& report) {
    std::ostringstream out;
    out << "path,package,parsed,skip_reason,line_count,clause_count,fact_only,max_subgoals,"
           "max_rule_lines,long_line_count,indentation_class,missing_space_after_comma,"
           "trailing_whitespace_lines,missing_newline_after_rule_op,"
           "missing_newline_after_subgoal,missing_newline_after_clause";
    for (std::size_t i = 0; i < kFeatureCount; ++i)
        out << ",feat_" << feature_name(static_cast<FeatureId>(i));
    out << "\n";
    for (const FileStats& f : report.files) {
        out << f.path << ',' << f.package << ',' << f.parsed << ',' << f.skip_reason << ','
            << f.line_count << ',' << f.clause_count << ',' << (f.fact_only ? "yes" : "no") << ','
            << f.max_subgoals << ',' << f.max_rule_lines << ',' << f.long_line_count << ','
            << indentation_class_name(f.indentation_class) << ','
            << f.missing_space_after_comma_count << ',' << f.trailing_whitespace_line_count << ','
            << f.missing_newline_after_rule_op_count << ','
            << f.missing_newline_after_subgoal_count << ','
            << f.missing_newline_after_clause_count;
        for (long c : f.feature_counts) out << ',' << c;
        out << "\n";
    }
    return std::move(out).str();
}

std::string report_to_text(const CorpusReport& report) {
    std::ostringstream out;
    out << "files: " << report.files_total << " (parsed " << report.files_parsed << ", failed "
        << report.files_failed << ", skipped " << report.files_skipped << ") in "
        << report.packages_total << " packages\n";
    long attempted = report.files_total - report.files_skipped;
    if (attempted > 0)
        out << "parse success: " << report.files_parsed << "/" << attempted << " ("
            << rounded_share(report.files_parsed, attempted) << " %)\n";
    long indent_total = 0;
    for (long c : report.indentation_counts) indent_total += c;
    out << "indentation:";
    for (std::size_t i = 0; i < 4; ++i) {
        out << " " << indentation_class_name(static_cast<IndentationClass>(i)) << " "
            << report.indentation_counts[i];
        if (indent_total > 0)
            out << " (" << rounded_share(report.indentation_counts[i], indent_total) << " %)";
        if (i + 1 < 4) out << ",";
    }
    out << "\n";
    out << "features (occurrences, packages):\n";
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
        out << "  " << feature_name(static_cast<FeatureId>(i)) << ": "
            << report.features[i].occurrences << " in " << report.features[i].packages_present
            << " of " << report.packages_total << " packages\n";
    }
    auto histo = [&](const char* name, const std::array<long, 26>& bins) {
        out << name << ":";
        for (std::size_t i = 0; i < bins.size(); ++i) {
            if (bins[i] == 0) continue;
            out << " " << (i == 25 ? "25+" : std::to_string(i)) << "=" << bins[i];
        }
        out << "\n";
    };
    histo("max_subgoals histogram", report.subgoal_histogram);
    histo("max_rule_lines histogram", report.rule_lines_histogram);
    return std::move(out).str();
}

}  // namespace prolint
