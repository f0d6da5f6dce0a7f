#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "prolint/corpus.hpp"

using namespace prolint;
namespace fs = std::filesystem;

namespace {

FeatureCounts features_of(std::string_view src) {
    LexResult lexed = tokenize(src, DialectOptions::swi());
    return detect_features(lexed);
}

long feat(const FeatureCounts& c, FeatureId id) {
    return c[static_cast<std::size_t>(id)];
}

struct TempDir {
    fs::path path;
    TempDir(const char* name) {
        path = fs::temp_directory_path() / name;
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    void write(const std::string& rel, const std::string& text) const {
        fs::path p = path / rel;
        fs::create_directories(p.parent_path());
        std::ofstream out(p, std::ios::binary);
        out << text;
    }
};

FileStats analyze(std::string src, const Limits& limits = {},
                  const DialectOptions& d = DialectOptions::swi()) {
    return analyze_source(std::move(src), "test.pl", OperatorTable::standard(d.profile), d,
                          limits);
}

}  // namespace

TEST_CASE("feature detection per Table 2 rows") {
    auto sheb = features_of("#!/usr/bin/env swipl\na.\n");
    CHECK(feat(sheb, FeatureId::shebang) == 1);

    CHECK(feat(features_of("a(1_000).\n"), FeatureId::digit_groups) == 1);
    CHECK(feat(features_of("a(1000).\n"), FeatureId::digit_groups) == 0);

    CHECK(feat(features_of("x(p{a: 1}).\n"), FeatureId::dicts) == 1);

    CHECK(feat(features_of("a('\\u2C6F').\n"), FeatureId::unicode_character_escape) == 1);
    CHECK(feat(features_of("a('\\x41\\').\n"), FeatureId::unicode_character_escape) == 0);

    CHECK(feat(features_of("a('\\x00').\n"), FeatureId::missing_closing_backslash) == 1);
    CHECK(feat(features_of("a('\\x00\\').\n"), FeatureId::missing_closing_backslash) == 0);

    CHECK(feat(features_of("a(0'').\n"), FeatureId::single_quote_char_constant) == 1);
    CHECK(feat(features_of("a(0''').\n"), FeatureId::single_quote_char_constant) == 0);

    CHECK(feat(features_of("X is pi().\n"), FeatureId::zero_arguments_compound) == 1);
    CHECK(feat(features_of("X is pi.\n"), FeatureId::zero_arguments_compound) == 0);

    CHECK(feat(features_of("a(\"x\ty\").\n"), FeatureId::tab_in_quotes) == 1);
    CHECK(feat(features_of("a(\"\\t\").\n"), FeatureId::tab_in_quotes) == 0);  // escape, not literal

    CHECK(feat(features_of("A = 1e3.\n"), FeatureId::integer_exponential_notation) == 1);
    CHECK(feat(features_of("A = 1.0e3.\n"), FeatureId::integer_exponential_notation) == 0);
}

TEST_CASE("features only count under a dialect that lexes them") {
    // under iso "1e3" lexes as 1 then e3: no float token at all
    LexResult iso = tokenize("A = 1e3.\n", DialectOptions::iso());
    CHECK(feat(detect_features(iso), FeatureId::integer_exponential_notation) == 0);
}

TEST_CASE("indentation classification") {
    CHECK(classify_indentation("a.\nb.\n") == IndentationClass::no_indentation);
    CHECK(classify_indentation("a :-\n    b.\n") == IndentationClass::spaces_only);
    CHECK(classify_indentation("a :-\n\tb.\n") == IndentationClass::tabs_only);
    CHECK(classify_indentation("a :-\n\tb,\n    c.\n") == IndentationClass::mixed);
    CHECK(classify_indentation("a :-\n \tb.\n") == IndentationClass::mixed);
    // whitespace-only lines do not count
    CHECK(classify_indentation("a.\n   \nb.\n") == IndentationClass::no_indentation);
    // indented comments count
    CHECK(classify_indentation("a.\n  % note\n") == IndentationClass::spaces_only);
}

TEST_CASE("collect_operators folds directives last-wins") {
    TempDir dir("prolint_ops_test");
    dir.write("one.pl", ":- op(600, xfx, op_a).\nfact(a).\n");
    dir.write("two.pl", ":- op(500, xfx, op_a).\n:- op(700, xfy, op_b).\n");
    dir.write("three.pl", "no_ops_here.\n");
    std::vector<fs::path> files = {dir.path / "one.pl", dir.path / "two.pl",
                                   dir.path / "three.pl"};
    DialectOptions d = DialectOptions::swi();
    OperatorCollection c = collect_operators(files, OperatorTable::standard(d.profile), d);
    auto def = c.table.infix_postfix("op_a");
    REQUIRE(def.has_value());
    CHECK(def->priority == 500);  // last wins
    CHECK(c.table.infix_postfix("op_b").has_value());
    REQUIRE(c.warnings.size() == 1);
    CHECK(c.warnings[0].find("op_a") != std::string::npos);
}

TEST_CASE("collect_operators handles name lists and quoted names") {
    TempDir dir("prolint_ops_list");
    dir.write("a.pl", ":- op(650, xfy, [opx, opy]).\n:- op(640, xfx, '<=>').\n");
    DialectOptions d = DialectOptions::swi();
    OperatorCollection c = collect_operators({dir.path / "a.pl"},
                                             OperatorTable::standard(d.profile), d);
    CHECK(c.table.infix_postfix("opx").has_value());
    CHECK(c.table.infix_postfix("opy").has_value());
    CHECK(c.table.infix_postfix("<=>").has_value());
}

TEST_CASE("analyze_source computes the documented fixture") {
    FileStats stats = analyze("a.\nb :- c,\n  d.\n");
    CHECK(stats.parsed == "yes");
    CHECK(stats.line_count == 3);
    CHECK(stats.clause_count == 2);
    CHECK(stats.max_subgoals == 2);
    CHECK(stats.max_rule_lines == 2);
    CHECK(stats.indentation_class == IndentationClass::spaces_only);
    CHECK_FALSE(stats.fact_only);
}

TEST_CASE("empty file analyzes clean") {
    FileStats stats = analyze("");
    CHECK(stats.parsed == "yes");
    CHECK(stats.clause_count == 0);
    CHECK_FALSE(stats.fact_only);
    CHECK(stats.indentation_class == IndentationClass::no_indentation);
}

TEST_CASE("fact_only files") {
    CHECK(analyze("a.\nb.\nc(1).\n").fact_only);
    CHECK_FALSE(analyze("a :- b.\n").fact_only);
    CHECK_FALSE(analyze("").fact_only);
}

TEST_CASE("size exclusions skip before parsing") {
    Limits limits;
    limits.max_bytes = 64;
    FileStats large = analyze(std::string(100, 'a'), limits);
    CHECK(large.parsed == "skipped");
    CHECK(large.skip_reason == "too_large");
    CHECK(large.clause_count == 0);

    Limits lines;
    lines.max_lines = 5;
    std::string many;
    for (int i = 0; i < 10; ++i) many += "a.\n";
    FileStats long_file = analyze(many, lines);
    CHECK(long_file.parsed == "skipped");
    CHECK(long_file.skip_reason == "too_long");
    CHECK(long_file.line_count == 10);
}

TEST_CASE("timeout injection produces a timeout skip") {
    Limits limits;
    limits.inject_timeout_substr = "test.pl";
    FileStats stats = analyze("a.\nb.\n", limits);
    CHECK(stats.parsed == "skipped");
    CHECK(stats.skip_reason == "timeout");
    CHECK(stats.clause_count == 0);  // partial stats discarded
    CHECK(stats.line_count == 2);
}

TEST_CASE("style counters mirror the lint rules") {
    FileStats stats = analyze("f(a,b) :- g. h(1, 2).  \n");
    CHECK(stats.missing_space_after_comma_count == 1);
    CHECK(stats.missing_newline_after_rule_op_count == 1);
    CHECK(stats.missing_newline_after_clause_count == 1);
    CHECK(stats.trailing_whitespace_line_count == 1);
}

TEST_CASE("aggregate bins histograms with a 25+ overflow") {
    std::vector<FileStats> stats(3);
    stats[0].path = "a.pl";
    stats[0].package = "p1";
    stats[0].parsed = "yes";
    stats[0].clause_count = 2;
    stats[0].max_subgoals = 3;
    stats[0].max_rule_lines = 4;
    stats[1].path = "b.pl";
    stats[1].package = "p1";
    stats[1].parsed = "yes";
    stats[1].clause_count = 1;
    stats[1].max_subgoals = 30;
    stats[1].max_rule_lines = 40;
    stats[2].path = "c.pl";
    stats[2].package = "p2";
    stats[2].parsed = "yes";
    stats[2].clause_count = 0;  // no clauses: not in the histograms
    CorpusReport report = aggregate(std::move(stats), 2, {});
    CHECK(report.subgoal_histogram[3] == 1);
    CHECK(report.subgoal_histogram[25] == 1);
    CHECK(report.rule_lines_histogram[4] == 1);
    CHECK(report.rule_lines_histogram[25] == 1);
    long total = 0;
    for (long b : report.subgoal_histogram) total += b;
    CHECK(total == 2);  // only files with clauses
}

TEST_CASE("aggregate is linear in its input") {
    auto mk = [](const char* path, long subgoals) {
        FileStats f;
        f.path = path;
        f.package = "p";
        f.parsed = "yes";
        f.clause_count = 1;
        f.max_subgoals = subgoals;
        return f;
    };
    std::vector<FileStats> a = {mk("a.pl", 1), mk("b.pl", 2)};
    std::vector<FileStats> b = {mk("c.pl", 2), mk("d.pl", 30)};
    std::vector<FileStats> both = a;
    both.insert(both.end(), b.begin(), b.end());
    CorpusReport ra = aggregate(a, 1, {});
    CorpusReport rb = aggregate(b, 1, {});
    CorpusReport rboth = aggregate(both, 1, {});
    for (std::size_t i = 0; i < 26; ++i)
        CHECK(rboth.subgoal_histogram[i] == ra.subgoal_histogram[i] + rb.subgoal_histogram[i]);
}

TEST_CASE("feature presence counts packages, not files") {
    auto mk = [](const char* path, const char* pkg, long dicts) {
        FileStats f;
        f.path = path;
        f.package = pkg;
        f.parsed = "yes";
        f.feature_counts[static_cast<std::size_t>(FeatureId::dicts)] = dicts;
        return f;
    };
    std::vector<FileStats> stats = {mk("p1/a.pl", "p1", 1), mk("p1/b.pl", "p1", 1),
                                    mk("p2/c.pl", "p2", 0), mk("p3/d.pl", "p3", 0)};
    CorpusReport report = aggregate(std::move(stats), 4, {});
    const FeatureTotal& dicts = report.features[static_cast<std::size_t>(FeatureId::dicts)];
    CHECK(dicts.occurrences == 2);
    CHECK(dicts.packages_present == 1);
    CHECK(report.packages_total == 4);
}

TEST_CASE("run_corpus end to end is deterministic across parallelism") {
    TempDir dir("prolint_corpus_run");
    dir.write("pkg_a/one.pl", ":- op(700, xfx, ===).\nx(a === b).\n");
    dir.write("pkg_a/two.pl", "f(1,2).\ng :- h,\n    i.\n");
    dir.write("pkg_b/three.pl", "#!/usr/bin/env swipl\nt(p{a: 1}).\n");
    dir.write("pkg_b/notes.txt", "not prolog\n");
    DialectOptions d = DialectOptions::swi();
    Limits limits;
    CorpusReport serial = run_corpus(dir.path, OperatorTable::standard(d.profile), d, limits, 1);
    CorpusReport parallel = run_corpus(dir.path, OperatorTable::standard(d.profile), d, limits, 4);
    CHECK(report_to_json(serial) == report_to_json(parallel));
    CHECK(serial.files_total == 3);
    CHECK(serial.files_parsed == 3);
    CHECK(serial.packages_total == 2);
    const FeatureTotal& sheb = serial.features[static_cast<std::size_t>(FeatureId::shebang)];
    CHECK(sheb.occurrences == 1);
    CHECK(sheb.packages_present == 1);
}

TEST_CASE("csv export has a fixed header and one row per file") {
    std::vector<FileStats> stats(1);
    stats[0].path = "x.pl";
    stats[0].package = "p";
    stats[0].parsed = "yes";
    CorpusReport report = aggregate(std::move(stats), 1, {});
    std::string csv = report_to_csv(report);
    CHECK(csv.find("path,package,parsed,skip_reason,line_count") == 0);
    CHECK(csv.find("\nx.pl,p,yes,") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}
