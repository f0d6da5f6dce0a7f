#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prolint/ast.hpp"
#include "prolint/config.hpp"
#include "prolint/corpus.hpp"
#include "prolint/lexer.hpp"
#include "prolint/parser.hpp"
#include "prolint/quality.hpp"
#include "prolint/serialize.hpp"
#include "prolint/style.hpp"

namespace fs = std::filesystem;
using namespace prolint;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitViolations = 1;
constexpr int kExitSyntaxError = 2;
constexpr int kExitUsage = 3;

bool stdout_is_tty() {
    return isatty(fileno(stdout)) != 0 && std::getenv("NO_COLOR") == nullptr;
}

std::optional<std::string> read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return std::move(buf).str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

// A UTF-8 byte order mark is dropped before analysis; spans then refer to
// the stripped text.
void strip_bom(std::string& text) {
    if (text.size() >= 3 && text[0] == '\xEF' && text[1] == '\xBB' && text[2] == '\xBF')
        text.erase(0, 3);
}

struct ConfigCli {
    std::string config_file;
    std::string dialect;
    std::vector<std::string> sets;
    std::string format;
};

void add_config_flags(CLI::App* cmd, ConfigCli& cli) {
    cmd->add_option("--config", cli.config_file, "config file (overrides discovery)");
    cmd->add_option("--dialect", cli.dialect, "dialect profile: iso or swi")
        ->check(CLI::IsMember({"iso", "swi"}));
    cmd->add_option("--set", cli.sets, "override one option, e.g. --set max_line_length=100");
}

// defaults < .prolintrc (or PROLINT_CONFIG / --config) < --dialect < --set
int resolve_config(const ConfigCli& cli, const std::string& anchor_path, Config& config) {
    config = Config::defaults();
    fs::path config_path;
    if (!cli.config_file.empty()) {
        config_path = cli.config_file;
    } else if (const char* env = std::getenv("PROLINT_CONFIG"); env != nullptr && *env != '\0') {
        config_path = env;
    } else {
        fs::path anchor = anchor_path.empty() || anchor_path == "-" ? fs::current_path()
                                                                    : fs::path(anchor_path);
        if (auto found = discover_config(anchor)) config_path = *found;
    }
    if (!config_path.empty()) {
        if (auto err = load_config_file(config, config_path)) {
            std::cerr << "prolint: " << err->message << "\n";
            return kExitUsage;
        }
    }
    if (!cli.dialect.empty()) {
        if (auto err = apply_setting(config, "dialect", cli.dialect)) {
            std::cerr << "prolint: " << err->message << "\n";
            return kExitUsage;
        }
    }
    for (const std::string& kv : cli.sets) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::cerr << "prolint: --set expects key=value, got '" << kv << "'\n";
            return kExitUsage;
        }
        if (auto err = apply_setting(config, kv.substr(0, eq), kv.substr(eq + 1))) {
            std::cerr << "prolint: " << err->message << "\n";
            return kExitUsage;
        }
    }
    if (!cli.format.empty()) config.format = cli.format;
    return kExitClean;
}

std::vector<std::string> expand_paths(const std::vector<std::string>& paths, bool& missing) {
    std::vector<std::string> files;
    for (const std::string& p : paths) {
        if (p == "-") {
            files.push_back(p);
            continue;
        }
        std::error_code ec;
        if (fs::is_directory(p, ec)) {
            for (auto it = fs::recursive_directory_iterator(p, ec);
                 it != fs::recursive_directory_iterator(); it.increment(ec)) {
                if (ec) break;
                if (!it->is_regular_file(ec)) continue;
                std::string ext = it->path().extension().string();
                if (ext == ".pl" || ext == ".plt" || ext == ".pro" || ext == ".prolog")
                    files.push_back(it->path().string());
            }
        } else if (fs::is_regular_file(p, ec)) {
            files.push_back(p);
        } else {
            std::cerr << "prolint: no such file: " << p << "\n";
            missing = true;
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

// --- lint --------------------------------------------------------------------

struct LintSummary {
    std::vector<Diagnostic> diagnostics;
    bool syntax_errors = false;
};

LintSummary lint_source(std::string source, const std::string& path, const Config& config) {
    LintSummary summary;
    LexResult lexed = tokenize(source, config.dialect);
    if (!lexed.ok()) {
        summary.diagnostics.push_back({"syntax.error", Severity::error, lexed.error->message,
                                       path, lexed.error->span});
        summary.syntax_errors = true;
        return summary;
    }
    OperatorTable table = OperatorTable::standard(config.dialect.profile);
    ParseOutcome outcome = parse_program(lexed, table, config.dialect);
    for (const ParseError& err : outcome.errors) {
        summary.diagnostics.push_back({"syntax.error", Severity::error, err.message, path,
                                       err.span});
        summary.syntax_errors = true;
    }
    StyleCheckResult style = check_style(*outcome.cst, source, config.style, path);
    for (Diagnostic& d : style.diagnostics) summary.diagnostics.push_back(std::move(d));
    AstWithOrigin ast = cst_to_ast(*outcome.cst, config.dialect);
    for (Diagnostic& d : check_quality(ast, config.quality, path))
        summary.diagnostics.push_back(std::move(d));
    sort_diagnostics(summary.diagnostics);
    return summary;
}

int cmd_lint(const std::vector<std::string>& paths, const Config& config) {
    bool missing = false;
    std::vector<std::string> files = expand_paths(paths, missing);
    if (missing) return kExitUsage;
    bool color = config.format == "text" && stdout_is_tty();
    bool any_violation = false, any_syntax = false;
    nlohmann::ordered_json json_out = nlohmann::ordered_json::array();
    for (const std::string& path : files) {
        auto source = read_input(path);
        if (!source) {
            std::cerr << "prolint: cannot read " << path << "\n";
            return kExitUsage;
        }
        strip_bom(*source);
        LintSummary summary =
            lint_source(std::move(*source), path == "-" ? "<stdin>" : path, config);
        any_syntax |= summary.syntax_errors;
        any_violation |= !summary.diagnostics.empty();
        for (const Diagnostic& d : summary.diagnostics) {
            if (config.format == "json") {
                json_out.push_back({{"file", d.file},
                                    {"line", d.span.line_start},
                                    {"col", d.span.col_start},
                                    {"end_line", d.span.line_end},
                                    {"end_col", d.span.col_end},
                                    {"rule", d.rule_id},
                                    {"severity", d.severity == Severity::error ? "error" : "warning"},
                                    {"message", d.message}});
            } else {
                std::cout << format_diagnostic(d, color) << "\n";
            }
        }
    }
    if (config.format == "json") std::cout << json_out.dump(2) << "\n";
    if (any_syntax) return kExitSyntaxError;
    return any_violation ? kExitViolations : kExitClean;
}

// --- fmt ---------------------------------------------------------------------

std::string unified_diff(const std::string& path, const std::string& before,
                         const std::string& after) {
    auto a = split_lines(before);
    auto b = split_lines(after);
    // LCS table; formatted sources are small
    std::size_t n = a.size(), m = b.size();
    std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = m; j-- > 0;)
            lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    std::ostringstream out;
    out << "--- " << path << "\n+++ " << path << " (formatted)\n";
    std::size_t i = 0, j = 0;
    while (i < n || j < m) {
        if (i < n && j < m && a[i] == b[j]) {
            out << ' ' << a[i] << "\n";
            ++i, ++j;
        } else if (j < m && (i == n || lcs[i][j + 1] >= lcs[i + 1][j])) {
            out << '+' << b[j] << "\n";
            ++j;
        } else {
            out << '-' << a[i] << "\n";
            ++i;
        }
    }
    return std::move(out).str();
}

int cmd_fmt(const std::vector<std::string>& paths, const Config& config, const std::string& mode) {
    if (style_has_infer(config.style)) {
        std::cerr << "prolint: fmt needs concrete style values; replace 'infer' settings\n";
        return kExitUsage;
    }
    SerializeOptions options = style_to_serialize_options(config.style);
    OperatorTable table = OperatorTable::standard(config.dialect.profile);
    bool missing = false;
    std::vector<std::string> files = expand_paths(paths, missing);
    if (missing) return kExitUsage;
    bool any_change = false, any_error = false;
    for (const std::string& path : files) {
        auto source = read_input(path);
        if (!source) {
            std::cerr << "prolint: cannot read " << path << "\n";
            return kExitUsage;
        }
        strip_bom(*source);
        FormatResult formatted = format_source(*source, options, table, config.dialect);
        if (!formatted.ok) {
            std::cerr << path << ": " << formatted.error << "\n";
            any_error = true;
            continue;
        }
        bool changed = formatted.text != *source;
        any_change |= changed;
        if (mode == "write") {
            if (path == "-") {
                std::cout << formatted.text;
            } else if (changed) {
                std::ofstream out(path, std::ios::binary | std::ios::trunc);
                out << formatted.text;
            }
        } else if (mode == "diff") {
            if (changed) std::cout << unified_diff(path == "-" ? "<stdin>" : path, *source,
                                                   formatted.text);
        }
        // check mode only tracks `changed`
    }
    if (any_error) return kExitSyntaxError;
    if (mode == "check" && any_change) return kExitViolations;
    return kExitClean;
}

// --- stats ---------------------------------------------------------------------

int cmd_stats(const std::string& root, const Config& config, const std::string& json_out,
              const std::string& csv_out, int jobs) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        std::cerr << "prolint: not a directory: " << root << "\n";
        return kExitUsage;
    }
    OperatorTable table = OperatorTable::standard(config.dialect.profile);
    CorpusReport report = run_corpus(root, table, config.dialect, config.limits, jobs);
    auto write_out = [](const std::string& target, const std::string& text) {
        if (target == "-") {
            std::cout << text;
            return true;
        }
        std::ofstream out(target, std::ios::binary | std::ios::trunc);
        if (!out) return false;
        out << text;
        return true;
    };
    bool emitted = false;
    if (!json_out.empty()) {
        if (!write_out(json_out, report_to_json(report))) {
            std::cerr << "prolint: cannot write " << json_out << "\n";
            return kExitUsage;
        }
        emitted = true;
    }
    if (!csv_out.empty()) {
        if (!write_out(csv_out, report_to_csv(report))) {
            std::cerr << "prolint: cannot write " << csv_out << "\n";
            return kExitUsage;
        }
        emitted = true;
    }
    if (!emitted) {
        if (config.format == "json")
            std::cout << report_to_json(report);
        else
            std::cout << report_to_text(report);
    }
    return kExitClean;
}

// --- debug dumps -----------------------------------------------------------------

int with_parsed_file(const std::string& path, const Config& config,
                     const std::function<void(const LexResult&, const ParseOutcome&)>& fn) {
    auto source = read_input(path);
    if (!source) {
        std::cerr << "prolint: cannot read " << path << "\n";
        return kExitUsage;
    }
    strip_bom(*source);
    LexResult lexed = tokenize(*source, config.dialect);
    if (!lexed.ok()) {
        std::cerr << path << ":" << lexed.error->span.line_start << ":"
                  << lexed.error->span.col_start << ": " << lexed.error->message << "\n";
        return kExitSyntaxError;
    }
    OperatorTable table = OperatorTable::standard(config.dialect.profile);
    ParseOutcome outcome = parse_program(lexed, table, config.dialect);
    if (!outcome.errors.empty()) {
        for (const ParseError& err : outcome.errors)
            std::cerr << path << ":" << err.span.line_start << ":" << err.span.col_start << ": "
                      << err.message << "\n";
        return kExitSyntaxError;
    }
    fn(lexed, outcome);
    return kExitClean;
}

int cmd_tokens(const std::string& path, const Config& config) {
    auto source = read_input(path);
    if (!source) {
        std::cerr << "prolint: cannot read " << path << "\n";
        return kExitUsage;
    }
    strip_bom(*source);
    LexResult lexed = tokenize(*source, config.dialect);
    if (!lexed.ok()) {
        std::cerr << path << ":" << lexed.error->span.line_start << ":"
                  << lexed.error->span.col_start << ": " << lexed.error->message << "\n";
        return kExitSyntaxError;
    }
    for (const Token& tok : lexed.tokens) {
        std::cout << tok.span.line_start << ":" << tok.span.col_start << "\t"
                  << token_kind_name(tok.kind) << "\t" << tok.text << "\n";
    }
    return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prolog source analysis: lossless parser, linter, formatter"};
    app.require_subcommand(1);

    ConfigCli cli;
    std::vector<std::string> paths;
    std::string mode = "diff";
    std::string stats_dir, json_out, csv_out;
    int jobs = 0;
    std::string inject_timeout;
    bool ast_term = false, deduce = false;

    CLI::App* lint = app.add_subcommand("lint", "check style and quality rules");
    lint->add_option("paths", paths, "files or directories")->required();
    add_config_flags(lint, cli);
    lint->add_option("--format", cli.format, "output format")->check(CLI::IsMember({"text", "json"}));

    CLI::App* fmt = app.add_subcommand("fmt", "reformat source");
    fmt->add_option("paths", paths, "files or directories")->required();
    add_config_flags(fmt, cli);
    bool write_flag = false, diff_flag = false, check_flag = false;
    fmt->add_flag("--write", write_flag, "rewrite files in place");
    fmt->add_flag("--diff", diff_flag, "print a unified diff (default)");
    fmt->add_flag("--check", check_flag, "exit 1 when a file would change");

    CLI::App* stats = app.add_subcommand("stats", "corpus analysis over a directory tree");
    stats->add_option("dir", stats_dir, "corpus root; subdirectories are packages")->required();
    add_config_flags(stats, cli);
    stats->add_option("--format", cli.format, "stdout format")
        ->check(CLI::IsMember({"text", "json"}));
    stats->add_option("--json", json_out, "write the JSON report to a file ('-' for stdout)");
    stats->add_option("--csv", csv_out, "write per-file stats as CSV ('-' for stdout)");
    stats->add_option("--jobs", jobs, "worker threads (default: hardware)");
    stats->add_option("--inject-timeout", inject_timeout,
                      "treat paths containing this substring as timed out (testing)")
        ->group("");  // hidden

    CLI::App* tokens = app.add_subcommand("tokens", "dump the token stream");
    tokens->add_option("file", paths, "source file")->required();
    add_config_flags(tokens, cli);

    CLI::App* ast = app.add_subcommand("ast", "dump the abstract syntax tree");
    ast->add_option("file", paths, "source file")->required();
    ast->add_flag("--term", ast_term, "compact term rendering instead of the tree");
    ast->add_flag("--deduce", deduce, "enable operator deduction");
    add_config_flags(ast, cli);

    CLI::App* cst = app.add_subcommand("cst", "dump the concrete syntax tree with layout");
    cst->add_option("file", paths, "source file")->required();
    add_config_flags(cst, cli);

    CLI11_PARSE(app, argc, argv);

    std::string anchor = !paths.empty() ? paths.front() : (!stats_dir.empty() ? stats_dir : "");
    Config config;
    if (int rc = resolve_config(cli, anchor, config); rc != kExitClean) return rc;

    if (app.got_subcommand(lint)) return cmd_lint(paths, config);
    if (app.got_subcommand(fmt)) {
        int chosen = (write_flag ? 1 : 0) + (diff_flag ? 1 : 0) + (check_flag ? 1 : 0);
        if (chosen > 1) {
            std::cerr << "prolint: pick one of --write, --diff, --check\n";
            return kExitUsage;
        }
        if (write_flag) mode = "write";
        else if (check_flag) mode = "check";
        return cmd_fmt(paths, config, mode);
    }
    if (app.got_subcommand(stats)) {
        config.limits.inject_timeout_substr = inject_timeout;
        return cmd_stats(stats_dir, config, json_out, csv_out, jobs);
    }
    if (app.got_subcommand(tokens)) return cmd_tokens(paths.front(), config);
    if (app.got_subcommand(ast)) {
        if (deduce) config.dialect.deduce_operators = true;
        return with_parsed_file(paths.front(), config,
                                [&](const LexResult&, const ParseOutcome& outcome) {
                                    AstWithOrigin tree = cst_to_ast(*outcome.cst, config.dialect);
                                    if (ast_term)
                                        std::cout << ast_term_string(*tree.ast) << "\n";
                                    else
                                        std::cout << dump_ast(*tree.ast);
                                    for (const OpDef& def : outcome.deduced_ops)
                                        std::cout << "% deduced op(" << def.priority << ", "
                                                  << specifier_name(def.specifier) << ", "
                                                  << def.name << ")\n";
                                });
    }
    if (app.got_subcommand(cst)) {
        return with_parsed_file(paths.front(), config,
                                [](const LexResult&, const ParseOutcome& outcome) {
                                    std::cout << dump_cst(*outcome.cst);
                                });
    }
    return kExitUsage;
}
