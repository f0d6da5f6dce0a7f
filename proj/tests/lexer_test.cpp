#include <doctest.h>

#include <stdexcept>

#include "prolint/lexer.hpp"

using namespace prolint;

namespace {

LexResult lex(std::string_view src, const DialectOptions& d = DialectOptions::iso()) {
    return tokenize(src, d);
}

std::vector<std::pair<TokenKind, std::string>> kinds(const LexResult& r) {
    std::vector<std::pair<TokenKind, std::string>> out;
    for (const Token& t : r.tokens) out.emplace_back(t.kind, t.text);
    return out;
}

}  // namespace

TEST_CASE("empty input yields no tokens and no error") {
    auto r = lex("");
    CHECK(r.ok());
    CHECK(r.tokens.empty());
    CHECK(r.trailing.empty());
}

TEST_CASE("underscore-letter is one variable token") {
    auto r = lex("_a");
    REQUIRE(r.ok());
    REQUIRE(r.tokens.size() == 1);
    CHECK(r.tokens[0].kind == TokenKind::variable);
    CHECK(r.tokens[0].text == "_a");
}

TEST_CASE("variable classification") {
    auto anon = lex("_");
    auto named = lex("_a");
    auto cap = lex("X");
    CHECK(classify_variable(anon.tokens[0]) == VariableClass::anonymous);
    CHECK(classify_variable(named.tokens[0]) == VariableClass::named);
    CHECK(classify_variable(cap.tokens[0]) == VariableClass::named);
    auto name = lex("foo");
    CHECK_THROWS_AS(classify_variable(name.tokens[0]), std::invalid_argument);
}

TEST_CASE("digit groups split without the flag and join with it") {
    auto iso = lex("1_000");
    REQUIRE(iso.ok());
    REQUIRE(iso.tokens.size() == 2);
    CHECK(iso.tokens[0].kind == TokenKind::integer);
    CHECK(iso.tokens[0].text == "1");
    CHECK(iso.tokens[1].kind == TokenKind::variable);
    CHECK(iso.tokens[1].text == "_000");

    DialectOptions swi = DialectOptions::swi();
    auto grouped = lex("1_000", swi);
    REQUIRE(grouped.ok());
    REQUIRE(grouped.tokens.size() == 1);
    CHECK(grouped.tokens[0].kind == TokenKind::integer);
    CHECK(grouped.tokens[0].text == "1_000");
    CHECK(integer_token_value(grouped.tokens[0], swi) == 1000);
}

TEST_CASE("char code constants") {
    auto r = lex("0'a");
    REQUIRE(r.ok());
    REQUIRE(r.tokens.size() == 1);
    CHECK(r.tokens[0].kind == TokenKind::char_code_constant);
    CHECK(r.tokens[0].text == "0'a");
    CHECK(integer_token_value(r.tokens[0], DialectOptions::iso()) == 'a');

    auto quoted = lex("0'''");
    REQUIRE(quoted.ok());
    REQUIRE(quoted.tokens.size() == 1);
    CHECK(quoted.tokens[0].text == "0'''");
    CHECK(integer_token_value(quoted.tokens[0], DialectOptions::iso()) == '\'');

    auto esc = lex("0'\\n");
    REQUIRE(esc.ok());
    CHECK(esc.tokens[0].kind == TokenKind::char_code_constant);
    CHECK(integer_token_value(esc.tokens[0], DialectOptions::iso()) == '\n');
}

TEST_CASE("single quote char constant needs its dialect flag") {
    auto iso = lex("0''.");
    REQUIRE(iso.ok());
    REQUIRE(iso.tokens.size() >= 2);
    CHECK(iso.tokens[0].kind == TokenKind::integer);
    CHECK(iso.tokens[0].text == "0");
    CHECK(iso.tokens[1].kind == TokenKind::name);
    CHECK(iso.tokens[1].text == "''");

    auto swi = lex("0''.", DialectOptions::swi());
    REQUIRE(swi.ok());
    CHECK(swi.tokens[0].kind == TokenKind::char_code_constant);
    CHECK(swi.tokens[0].text == "0''");
    CHECK(integer_token_value(swi.tokens[0], DialectOptions::swi()) == '\'');
}

TEST_CASE("end token needs following layout") {
    auto spaced = lex("a. b.");
    REQUIRE(spaced.ok());
    REQUIRE(spaced.tokens.size() == 4);
    CHECK(spaced.tokens[1].kind == TokenKind::end);
    CHECK(spaced.tokens[3].kind == TokenKind::end);

    auto dotted = lex("a.b");
    REQUIRE(dotted.ok());
    REQUIRE(dotted.tokens.size() == 3);
    CHECK(dotted.tokens[0].text == "a");
    CHECK(dotted.tokens[1].kind == TokenKind::name);
    CHECK(dotted.tokens[1].text == ".");
    CHECK(dotted.tokens[2].text == "b");
}

TEST_CASE("graphic tokens take maximal munch") {
    auto r = lex("=..");
    REQUIRE(r.ok());
    REQUIRE(r.tokens.size() == 1);
    CHECK(r.tokens[0].text == "=..");

    auto ops = lex("X=Y");
    REQUIRE(ops.tokens.size() == 3);
    CHECK(ops.tokens[1].text == "=");
}

TEST_CASE("floats and integer exponents") {
    auto f = lex("1.5");
    CHECK(f.tokens[0].kind == TokenKind::floating);
    auto fe = lex("1.5e3");
    CHECK(fe.tokens[0].kind == TokenKind::floating);
    CHECK(fe.tokens[0].text == "1.5e3");
    auto fe2 = lex("1.0E-3");
    CHECK(fe2.tokens[0].kind == TokenKind::floating);

    // '1.' is an integer followed by an end token
    auto trailing = lex("1. ");
    REQUIRE(trailing.tokens.size() == 2);
    CHECK(trailing.tokens[0].kind == TokenKind::integer);
    CHECK(trailing.tokens[1].kind == TokenKind::end);

    auto iso = lex("1e3");
    REQUIRE(iso.tokens.size() == 2);
    CHECK(iso.tokens[0].text == "1");
    CHECK(iso.tokens[1].text == "e3");

    auto swi = lex("1e3", DialectOptions::swi());
    REQUIRE(swi.tokens.size() == 1);
    CHECK(swi.tokens[0].kind == TokenKind::floating);

    // incomplete exponent stays split
    auto split = lex("1.5e+", DialectOptions::swi());
    REQUIRE(split.tokens.size() == 3);
    CHECK(split.tokens[0].text == "1.5");
}

TEST_CASE("radix integers") {
    CHECK(lex("0x1F").tokens[0].text == "0x1F");
    CHECK(integer_token_value(lex("0x1F").tokens[0], DialectOptions::iso()) == 31);
    CHECK(integer_token_value(lex("0o17").tokens[0], DialectOptions::iso()) == 15);
    CHECK(integer_token_value(lex("0b101").tokens[0], DialectOptions::iso()) == 5);
    // bare 0x falls back to integer zero + name
    auto bad = lex("0xg");
    REQUIRE(bad.tokens.size() == 2);
    CHECK(bad.tokens[0].text == "0");
    CHECK(bad.tokens[1].text == "xg");
}

TEST_CASE("quoted atoms with escapes") {
    auto r = lex("'it''s'");
    REQUIRE(r.ok());
    CHECK(r.tokens[0].kind == TokenKind::name);
    CHECK(r.tokens[0].text == "'it''s'");
    CHECK(*unquote_token_text(r.tokens[0].text, DialectOptions::iso()) == "it's");

    auto esc = lex("'a\\n b'");
    REQUIRE(esc.ok());
    CHECK(*unquote_token_text(esc.tokens[0].text, DialectOptions::iso()) == "a\n b");

    auto hex = lex("'\\x41\\'");
    REQUIRE(hex.ok());
    CHECK(*unquote_token_text(hex.tokens[0].text, DialectOptions::iso()) == "A");

    auto octal = lex("'\\101\\'");
    REQUIRE(octal.ok());
    CHECK(*unquote_token_text(octal.tokens[0].text, DialectOptions::iso()) == "A");
}

TEST_CASE("escape errors and dialect gates") {
    CHECK_FALSE(lex("'\\q'").ok());                    // unknown escape
    CHECK_FALSE(lex("'abc").ok());                     // unterminated
    CHECK_FALSE(lex("/* abc").ok());                   // unterminated comment
    CHECK_FALSE(lex("'\\x41'").ok());                  // missing closing backslash
    CHECK(lex("'\\x41'", DialectOptions::swi()).ok());  // allowed by flag
    CHECK_FALSE(lex("'\\u2C6F'").ok());
    CHECK(lex("'\\u2C6F'", DialectOptions::swi()).ok());
    CHECK_FALSE(lex("'a\tb'").ok());
    CHECK(lex("'a\tb'", DialectOptions::swi()).ok());
}

TEST_CASE("nested block comments only with the flag") {
    // without nesting the comment closes at the first */ and the rest lexes
    // as ordinary tokens
    auto iso = lex("/* a /* b */ c */ d");
    REQUIRE(iso.ok());
    REQUIRE(iso.tokens.size() == 3);
    CHECK(iso.tokens[0].text == "c");
    CHECK(iso.tokens[1].text == "*/");
    auto swi = lex("/* a /* b */ c */ d", DialectOptions::swi());
    REQUIRE(swi.ok());
    REQUIRE(swi.tokens.size() == 1);
    CHECK(swi.tokens[0].text == "d");
}

TEST_CASE("shebang handling") {
    auto iso = lex("#!x\na.");
    REQUIRE(iso.ok());
    CHECK(iso.tokens[0].text == "#");  // '#' then '!' lex as separate tokens

    auto swi = lex("#!/usr/bin/env swipl\na.", DialectOptions::swi());
    REQUIRE(swi.ok());
    REQUIRE(swi.tokens.size() == 2);
    REQUIRE(swi.tokens[0].layout_before.size() == 2);  // shebang + newline
    CHECK(swi.tokens[0].layout_before[0].kind == LayoutKind::shebang);
}

TEST_CASE("open_ct marks compound functors") {
    auto r = lex("f(a), f (a), (x)");
    REQUIRE(r.ok());
    CHECK(r.tokens[1].kind == TokenKind::open_ct);
    // after layout it is a plain open paren
    auto vals = kinds(r);
    int open_ct = 0, open_plain = 0;
    for (auto& [k, t] : vals) {
        if (k == TokenKind::open_ct) ++open_ct;
        if (k == TokenKind::open_paren) ++open_plain;
    }
    CHECK(open_ct == 1);
    CHECK(open_plain == 2);
}

TEST_CASE("dict_open needs the dialect flag and adjacency") {
    auto iso = lex("point{a: 1}");
    REQUIRE(iso.ok());
    CHECK(iso.tokens[1].kind == TokenKind::open_curly);

    auto swi = lex("point{a: 1}", DialectOptions::swi());
    REQUIRE(swi.ok());
    CHECK(swi.tokens[1].kind == TokenKind::dict_open);

    auto spaced = lex("point {a: 1}", DialectOptions::swi());
    CHECK(spaced.tokens[1].kind == TokenKind::open_curly);

    auto var_tag = lex("_{}", DialectOptions::swi());
    REQUIRE(var_tag.tokens.size() == 3);
    CHECK(var_tag.tokens[1].kind == TokenKind::dict_open);
}

TEST_CASE("lossless reconstruction keeps every byte") {
    std::string src = "  % comment\nfoo(X) :-\t/* b */ bar(X). \n\n";
    auto r = lex(src);
    REQUIRE(r.ok());
    CHECK(reconstruct(r) == src);
}

TEST_CASE("unicode atoms and variables") {
    DialectOptions swi = DialectOptions::swi();
    auto atom = lex("f(\xCE\xBB)", swi);  // lambda
    REQUIRE(atom.ok());
    CHECK(atom.tokens[2].kind == TokenKind::name);

    auto var = lex("\xCE\x94x", swi);  // capital Delta
    REQUIRE(var.ok());
    REQUIRE(var.tokens.size() == 1);
    CHECK(var.tokens[0].kind == TokenKind::variable);

    auto comment = lex("% \xE2\x88\x80 forall\na.", swi);
    CHECK(comment.ok());

    // invalid UTF-8 is a lex error
    CHECK_FALSE(lex("a \xFF b").ok());
}

TEST_CASE("layout_of_line reports leading whitespace composition") {
    auto r = lex("a.\n    b.\n\tc.\nd.\n  \t e.\n");
    REQUIRE(r.ok());
    CHECK(layout_of_line(r, 1).empty());
    auto l2 = layout_of_line(r, 2);
    REQUIRE(l2.size() == 1);
    CHECK(l2[0].kind == LayoutKind::space);
    CHECK(l2[0].count == 4);
    auto l3 = layout_of_line(r, 3);
    REQUIRE(l3.size() == 1);
    CHECK(l3[0].kind == LayoutKind::tab);
    auto l5 = layout_of_line(r, 5);
    REQUIRE(l5.size() == 3);
    CHECK(l5[0].kind == LayoutKind::space);
    CHECK(l5[1].kind == LayoutKind::tab);
    CHECK(l5[2].kind == LayoutKind::space);
    CHECK(layout_of_line(r, 99).empty());
}

TEST_CASE("trailing layout is returned separately") {
    auto r = lex("a. % done\n");
    REQUIRE(r.ok());
    REQUIRE(r.tokens.size() == 2);
    REQUIRE(r.trailing.size() == 3);  // space, comment, newline
    CHECK(r.trailing[1].kind == LayoutKind::line_comment);
    CHECK(r.trailing[1].text == "% done");
}

TEST_CASE("solo and punctuation tokens") {
    auto r = lex("!,;|[]{}");
    auto v = kinds(r);
    REQUIRE(v.size() == 8);
    CHECK(v[0] == std::pair{TokenKind::name, std::string("!")});
    CHECK(v[1].first == TokenKind::comma);
    CHECK(v[2] == std::pair{TokenKind::name, std::string(";")});
    CHECK(v[3].first == TokenKind::bar);
    CHECK(v[4].first == TokenKind::open_list);
    CHECK(v[5].first == TokenKind::close_list);
    CHECK(v[6].first == TokenKind::open_curly);
    CHECK(v[7].first == TokenKind::close_curly);
}

TEST_CASE("strings") {
    auto d = lex("\"hi there\"");
    CHECK(d.tokens[0].kind == TokenKind::double_quoted);
    auto b = lex("`raw`");
    CHECK(b.tokens[0].kind == TokenKind::back_quoted);
    auto dq = lex("\"a\"\"b\"");
    REQUIRE(dq.ok());
    REQUIRE(dq.tokens.size() == 1);  // doubled quote inside
}

TEST_CASE("line continuation inside quotes") {
    auto r = lex("'a\\\nb'");
    REQUIRE(r.ok());
    CHECK(*unquote_token_text(r.tokens[0].text, DialectOptions::iso()) == "ab");
}

TEST_CASE("determinism: same input same tokens") {
    std::string src = "f(X) :- g(X, [1,2|T]), X > 0.\n";
    auto a = lex(src);
    auto b = lex(src);
    REQUIRE(a.tokens.size() == b.tokens.size());
    for (std::size_t i = 0; i < a.tokens.size(); ++i) {
        CHECK(a.tokens[i].kind == b.tokens[i].kind);
        CHECK(a.tokens[i].text == b.tokens[i].text);
    }
}
