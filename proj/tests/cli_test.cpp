#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd;
    if (!stdin_text.empty()) {
        fs::path tmp = fs::temp_directory_path() / "prolint_cli_stdin.txt";
        std::ofstream out(tmp, std::ios::binary);
        out << stdin_text;
        out.close();
        cmd = std::string(PROLINT_BIN) + " " + args + " < " + tmp.string() + " 2>/dev/null";
    } else {
        cmd = std::string(PROLINT_BIN) + " " + args + " 2>/dev/null";
    }
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(output)};
}

std::string fixture(const std::string& rel) {
    return (fs::path(PROLINT_FIXTURES) / rel).string();
}

struct TempFile {
    fs::path path;
    TempFile(const char* name, const std::string& text) {
        path = fs::temp_directory_path() / name;
        std::ofstream out(path, std::ios::binary);
        out << text;
    }
    ~TempFile() { fs::remove(path); }
    std::string read() const {
        std::ifstream in(path, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
};

}  // namespace

TEST_CASE("lint exit codes") {
    auto clean = run("lint " + fixture("lint/clean.pl"));
    CHECK(clean.exit_code == 0);
    CHECK(clean.output.empty());

    auto dirty = run("lint " + fixture("lint/dirty.pl"));
    CHECK(dirty.exit_code == 1);
    CHECK(dirty.output.find("cov_2_5") != std::string::npos);
    CHECK(dirty.output.find("cov_2_7") != std::string::npos);

    auto broken = run("lint " + fixture("lint/broken.pl"));
    CHECK(broken.exit_code == 2);
    CHECK(broken.output.find("syntax.error") != std::string::npos);

    auto usage = run("lint --set nonsense=1 " + fixture("lint/clean.pl"));
    CHECK(usage.exit_code == 3);

    auto missing = run("lint /no/such/file.pl");
    CHECK(missing.exit_code == 3);
}

TEST_CASE("lint text format is file:line:col") {
    auto dirty = run("lint " + fixture("lint/dirty.pl"));
    CHECK(dirty.output.find("dirty.pl:1:4: warning cov_2_5") != std::string::npos);
}

TEST_CASE("lint json output carries the documented fields") {
    auto dirty = run("lint --format json " + fixture("lint/dirty.pl"));
    CHECK(dirty.exit_code == 1);
    json parsed = json::parse(dirty.output);
    REQUIRE(parsed.is_array());
    REQUIRE(!parsed.empty());
    for (const char* key : {"file", "line", "col", "end_line", "end_col", "rule", "severity",
                            "message"})
        CHECK(parsed[0].contains(key));
}

TEST_CASE("lint determinism") {
    std::string args = "lint " + fixture("lint/dirty.pl") + " " + fixture("lint/clean.pl");
    auto first = run(args);
    auto second = run(args);
    CHECK(first.output == second.output);
    CHECK(first.exit_code == second.exit_code);
}

TEST_CASE("config discovery picks up .prolintrc") {
    // the fixture config raises max_line_length violations only
    auto sub = run("lint " + fixture("config/sub/long.pl"));
    CHECK(sub.exit_code == 1);
    CHECK(sub.output.find("cov_2_3") != std::string::npos);
    CHECK(sub.output.find("cov_2_5") == std::string::npos);  // disabled in the rc

    // --set overrides the config file
    auto overridden = run("lint --set max_line_length=off " + fixture("config/sub/long.pl"));
    CHECK(overridden.exit_code == 0);
}

TEST_CASE("PROLINT_CONFIG env var overrides discovery") {
    TempFile rc("prolint_env_rc", "max_line_length = off\nspace_after_arglist_comma = off\n"
                                  "newline_after_rule_op = off\nnewline_after_subgoal = off\n"
                                  "newline_after_clause = off\nno_trailing_whitespace = off\n");
    std::string cmd = "PROLINT_CONFIG=" + rc.path.string() + " " + PROLINT_BIN + " lint " +
                      fixture("config/sub/long.pl") + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
}

TEST_CASE("fmt modes") {
    TempFile input("prolint_fmt_input.pl", "p:-q,r.\n");
    auto diff = run("fmt --diff " + input.path.string());
    CHECK(diff.exit_code == 0);
    CHECK(diff.output.find("-p:-q,r.") != std::string::npos);
    CHECK(diff.output.find("+p :-") != std::string::npos);
    CHECK(input.read() == "p:-q,r.\n");  // diff does not touch the file

    auto checkmode = run("fmt --check " + input.path.string());
    CHECK(checkmode.exit_code == 1);

    auto write = run("fmt --write " + input.path.string());
    CHECK(write.exit_code == 0);
    CHECK(input.read() == "p :-\n    q,\n    r.\n");

    auto recheck = run("fmt --check " + input.path.string());
    CHECK(recheck.exit_code == 0);

    auto rewrite = run("fmt --write " + input.path.string());
    CHECK(rewrite.exit_code == 0);
    CHECK(input.read() == "p :-\n    q,\n    r.\n");  // idempotent
}

TEST_CASE("fmt on stdin writes to stdout") {
    auto r = run("fmt --write -", "p:-q.\n");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "p :-\n    q.\n");
}

TEST_CASE("fmt rejects unparsable files untouched") {
    TempFile bad("prolint_fmt_bad.pl", "a b.\n");
    auto r = run("fmt --write " + bad.path.string());
    CHECK(r.exit_code == 2);
    CHECK(bad.read() == "a b.\n");
}

TEST_CASE("fmt rejects infer-valued style settings") {
    TempFile input("prolint_fmt_infer.pl", "a.\n");
    auto r = run("fmt --check --set max_line_length=infer " + input.path.string());
    CHECK(r.exit_code == 3);
}

TEST_CASE("tokens subcommand") {
    TempFile input("prolint_tokens.pl", "f(X) :- g.\n");
    auto r = run("tokens " + input.path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("name\tf") != std::string::npos);
    CHECK(r.output.find("open_ct\t(") != std::string::npos);
    CHECK(r.output.find("variable\tX") != std::string::npos);
    CHECK(r.output.find("end\t.") != std::string::npos);

    auto empty = run("tokens -", " ");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output.empty());
}

TEST_CASE("ast subcommand prints the tree and --term the compact form") {
    TempFile input("prolint_ast.pl", "positive(X) :- X > 0.\n");
    auto tree = run("ast " + input.path.string());
    CHECK(tree.exit_code == 0);
    CHECK(tree.output.find("program\n") == 0);
    CHECK(tree.output.find("compound positive/1") != std::string::npos);

    auto term = run("ast --term " + input.path.string());
    CHECK(term.exit_code == 0);
    CHECK(term.output ==
          "program([rule(compound(atom(positive), [variable('X')]), "
          "[infix(>, xfx, variable('X'), integer(0))])])\n");

    TempFile bad("prolint_ast_bad.pl", "f(.\n");
    auto err = run("ast " + bad.path.string());
    CHECK(err.exit_code == 2);
}

TEST_CASE("ast --deduce reports hypothesized operators") {
    TempFile input("prolint_ast_deduce.pl", "a b.\n");
    auto plain = run("ast " + input.path.string());
    CHECK(plain.exit_code == 2);
    auto deduced = run("ast --deduce " + input.path.string());
    CHECK(deduced.exit_code == 0);
    CHECK(deduced.output.find("% deduced op(") != std::string::npos);
}

TEST_CASE("cst subcommand dumps the concrete tree") {
    TempFile input("prolint_cst.pl", "a :- b.\n");
    auto r = run("cst " + input.path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("prolog_text") == 0);
    CHECK(r.output.find("operator_notation_term") != std::string::npos);
}

TEST_CASE("stats on a small tree") {
    fs::path dir = fs::temp_directory_path() / "prolint_cli_stats";
    fs::remove_all(dir);
    fs::create_directories(dir / "pkg1");
    std::ofstream(dir / "pkg1" / "a.pl") << "x(1).\ny :- x(_),\n    true.\n";
    std::ofstream(dir / "pkg1" / "b.pl") << "#!/x\nd(p{k: 1}).\n";
    auto text = run("stats " + dir.string());
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("files: 2 (parsed 2") != std::string::npos);

    auto jsonr = run("stats --json - " + dir.string());
    CHECK(jsonr.exit_code == 0);
    json parsed = json::parse(jsonr.output);
    CHECK(parsed["totals"]["files"] == 2);
    CHECK(parsed["features"]["dicts"]["occurrences"] == 1);

    auto csv = run("stats --csv - " + dir.string());
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("path,package,", 0) == 0);

    fs::path empty = fs::temp_directory_path() / "prolint_cli_stats_empty";
    fs::remove_all(empty);
    fs::create_directories(empty);
    auto none = run("stats " + empty.string());
    CHECK(none.exit_code == 0);
    fs::remove_all(dir);
    fs::remove_all(empty);
}

TEST_CASE("dialect flag switches profiles") {
    TempFile input("prolint_dialect.pl", "x(pi()).\n");
    auto swi = run("lint --set max_line_length=off " + input.path.string());
    CHECK(swi.exit_code == 0);  // default profile is swi
    auto iso = run("lint --dialect iso " + input.path.string());
    CHECK(iso.exit_code == 2);
}
