#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "prolint/lexer.hpp"
#include "prolint/optable.hpp"
#include "prolint/parser.hpp"

namespace prolint {

struct Limits {
    double timeout_seconds = 10.0;
    std::size_t max_bytes = 1048576;
    long max_lines = 20000;
    int long_line_limit = 80;
    // test hook: paths containing this substring start past their deadline
    std::string inject_timeout_substr;
};

enum class IndentationClass { no_indentation, spaces_only, tabs_only, mixed };
const char* indentation_class_name(IndentationClass c);

enum class FeatureId {
    shebang,
    digit_groups,
    dicts,
    unicode_character_escape,
    missing_closing_backslash,
    single_quote_char_constant,
    zero_arguments_compound,
    tab_in_quotes,
    integer_exponential_notation,
};
constexpr std::size_t kFeatureCount = 9;
const char* feature_name(FeatureId id);
using FeatureCounts = std::array<long, kFeatureCount>;

struct FileStats {
    std::string path;     // as reported (relative to the corpus root)
    std::string package;
    long line_count = 0;
    std::string parsed;       // "yes" | "no" | "skipped"
    std::string skip_reason;  // "" | "too_large" | "too_long" | "timeout"
    long clause_count = 0;
    bool fact_only = false;
    long max_subgoals = 0;
    long max_rule_lines = 0;
    long long_line_count = 0;
    IndentationClass indentation_class = IndentationClass::no_indentation;
    long missing_space_after_comma_count = 0;
    long trailing_whitespace_line_count = 0;
    long missing_newline_after_rule_op_count = 0;
    long missing_newline_after_subgoal_count = 0;
    long missing_newline_after_clause_count = 0;
    FeatureCounts feature_counts{};
};

// Occurrence counters for the SWI feature set; counts what is present in
// the token stream, so partially parsed files still contribute.
FeatureCounts detect_features(const LexResult& lexed);

// Indentation classification over all non-blank lines whose leading
// whitespace precedes content of any kind.
IndentationClass classify_indentation(std::string_view source);

struct OperatorCollection {
    OperatorTable table;
    std::vector<std::string> warnings;
};

// Pre-pass over a package: folds every top-level op/3 directive (shallow
// token scan, no term parsing) into one table, last definition wins.
// Files are visited in the order given; callers sort for determinism.
OperatorCollection collect_operators(const std::vector<std::filesystem::path>& files,
                                     const OperatorTable& base, const DialectOptions& dialect);

// Analysis of one file body (already read); `path` is only recorded.
FileStats analyze_source(std::string source, const std::string& path,
                         const OperatorTable& table, const DialectOptions& dialect,
                         const Limits& limits);
FileStats analyze_file(const std::filesystem::path& file, const std::string& reported_path,
                       const OperatorTable& table, const DialectOptions& dialect,
                       const Limits& limits);

struct PackageRollup {
    std::string name;
    long files = 0;
    long parsed = 0;
    long failed = 0;
    long skipped = 0;
    long clauses = 0;
    long lines = 0;
};

struct FeatureTotal {
    long occurrences = 0;
    long packages_present = 0;
};

struct CorpusReport {
    Limits limits;
    std::vector<FileStats> files;      // sorted by path
    std::vector<PackageRollup> packages;
    std::vector<std::string> operator_warnings;
    std::array<long, 26> subgoal_histogram{};     // bins 0..24 plus 25+
    std::array<long, 26> rule_lines_histogram{};  // same binning
    std::array<long, 4> indentation_counts{};     // indexed by IndentationClass
    std::array<FeatureTotal, kFeatureCount> features{};
    long files_total = 0;
    long files_parsed = 0;
    long files_failed = 0;
    long files_skipped = 0;
    long packages_total = 0;
    double parse_success_ratio = 0.0;  // parsed / (total - skipped)
};

// Deterministic fold; histogram entries cover files with at least one
// clause, indentation shares cover every analyzed (non-skipped) file.
CorpusReport aggregate(std::vector<FileStats> stats, long packages_total, const Limits& limits);

// Full corpus run: every immediate subdirectory of root is a package (files
// directly under root form the package "."), Prolog sources are
// .pl/.plt/.pro/.prolog. Per-package operator pre-pass, then per-file
// analysis (parallel when jobs > 1), then aggregation.
CorpusReport run_corpus(const std::filesystem::path& root, const OperatorTable& base,
                        const DialectOptions& dialect, const Limits& limits, int jobs = 0);

std::string report_to_json(const CorpusReport& report);
std::string report_to_csv(const CorpusReport& report);
std::string report_to_text(const CorpusReport& report);

}  // namespace prolint
