#include <doctest.h>

#include "prolint/ast.hpp"
#include "prolint/parser.hpp"

using namespace prolint;

namespace {

struct Parsed {
    LexResult lexed;
    ParseOutcome outcome;
};

Parsed parse(std::string_view src, const DialectOptions& d = DialectOptions::iso()) {
    Parsed p;
    p.lexed = tokenize(src, d);
    REQUIRE(p.lexed.ok());
    p.outcome = parse_program(p.lexed, OperatorTable::standard(d.profile), d);
    return p;
}

AstPtr ast_of(std::string_view src, const DialectOptions& d = DialectOptions::iso()) {
    Parsed p = parse(src, d);
    REQUIRE(p.outcome.ok());
    return std::move(cst_to_ast(*p.outcome.cst, d).ast);
}

std::string term_str(std::string_view src, const DialectOptions& d = DialectOptions::iso()) {
    return ast_term_string(*ast_of(src, d));
}

}  // namespace

TEST_CASE("simple facts, rules and directives") {
    CHECK(term_str("a.") == "program([fact(atom(a))])");
    CHECK(term_str("a :- b, c.") ==
          "program([rule(atom(a), [atom(b), atom(c)])])");
    CHECK(term_str(":- initialization(x).", DialectOptions::swi()) ==
          "program([directive(compound(atom(initialization), [atom(x)]))])");
}

TEST_CASE("the running example keeps its shape") {
    CHECK(term_str("positive(X) :- X > 0.") ==
          "program([rule(compound(atom(positive), [variable('X')]), "
          "[infix(>, xfx, variable('X'), integer(0))])])");
}

TEST_CASE("operator precedence is honored") {
    CHECK(term_str("x(1+2*3).") ==
          "program([fact(compound(atom(x), [infix(+, yfx, integer(1), "
          "infix(*, yfx, integer(2), integer(3)))]))])");
    CHECK(term_str("x((1+2)*3).") ==
          "program([fact(compound(atom(x), [infix(*, yfx, infix(+, yfx, integer(1), "
          "integer(2)), integer(3))]))])");
    // yfx chains to the left
    CHECK(term_str("x(1-2-3).") ==
          "program([fact(compound(atom(x), [infix(-, yfx, infix(-, yfx, integer(1), "
          "integer(2)), integer(3))]))])");
    // xfy chains to the right
    CHECK(term_str("a :- b ; c ; d.") ==
          "program([rule(atom(a), [infix(;, xfy, atom(b), infix(;, xfy, atom(c), "
          "atom(d)))])])");
}

TEST_CASE("xfx does not chain") {
    Parsed p = parse("a :- b :- c.");
    CHECK_FALSE(p.outcome.ok());
    REQUIRE(p.outcome.errors.size() == 1);
}

TEST_CASE("prefix operators and negative literals") {
    // adjacency folds a negative literal
    CHECK(term_str("x(-1).") == "program([fact(compound(atom(x), [integer(-1)]))])");
    // layout makes it a prefix application
    CHECK(term_str("x(- 1).") ==
          "program([fact(compound(atom(x), [prefix(-, fy, integer(1))]))])");
    // functional notation
    CHECK(term_str("x(-(1)).") ==
          "program([fact(compound(atom(x), [compound(atom(-), [integer(1)])]))])");
    CHECK(term_str("x(- - a).") ==
          "program([fact(compound(atom(x), [prefix(-, fy, prefix(-, fy, atom(a)))]))])");
    // (-2)**3: the literal folds, then ** applies
    CHECK(term_str("x(-2**3).") ==
          "program([fact(compound(atom(x), [infix(**, xfx, integer(-2), integer(3))]))])");
    // - 2**3 = -(2**3) because fy admits priority 200 operands
    CHECK(term_str("x(- 2**3).") ==
          "program([fact(compound(atom(x), [prefix(-, fy, infix(**, xfx, integer(2), "
          "integer(3)))]))])");
}

TEST_CASE("operator atoms as operands") {
    // ISO: fine as a lone argument or parenthesized
    CHECK(term_str("x(-, 1).") ==
          "program([fact(compound(atom(x), [atom(-), integer(1)]))])");
    CHECK(term_str("x((-)).") == "program([fact(compound(atom(x), [atom(-)]))])");
    CHECK(term_str("x([-]).") == "program([fact(compound(atom(x), [list([atom(-)])]))])");
    // not as an operand of another operator
    Parsed bad = parse("a :- X = - .");
    CHECK_FALSE(bad.outcome.ok());
    // allowed by the dialect flag
    DialectOptions relaxed = DialectOptions::iso();
    relaxed.allow_operator_as_operand = true;
    CHECK(term_str("a :- X = - .", relaxed) ==
          "program([rule(atom(a), [infix(=, xfx, variable('X'), atom(-))])])");
}

TEST_CASE("lists") {
    CHECK(term_str("x([]).") == "program([fact(compound(atom(x), [atom([])]))])");
    CHECK(term_str("x([1, 2]).") ==
          "program([fact(compound(atom(x), [list([integer(1), integer(2)])]))])");
    CHECK(term_str("x([1, 2 | T]).") ==
          "program([fact(compound(atom(x), [list([integer(1), integer(2)], "
          "tail(variable('T')))]))])");
    Parsed bad = parse("x([1, 2 | ]).");
    CHECK_FALSE(bad.outcome.ok());
}

TEST_CASE("curly terms") {
    CHECK(term_str("x({}).") == "program([fact(compound(atom(x), [atom({})]))])");
    CHECK(term_str("x({a, b}).") ==
          "program([fact(compound(atom(x), [curly(infix(,, xfy, atom(a), atom(b)))]))])");
}

TEST_CASE("empty-brace atoms can be compound functors") {
    CHECK(term_str("x({}(a)).") ==
          "program([fact(compound(atom(x), [compound(atom({}), [atom(a)])]))])");
    CHECK(term_str("x([](a)).") ==
          "program([fact(compound(atom(x), [compound(atom([]), [atom(a)])]))])");
}

TEST_CASE("comma is a separator inside argument lists") {
    CHECK(term_str("f(a, b).") ==
          "program([fact(compound(atom(f), [atom(a), atom(b)]))])");
    // parenthesized comma is the operator
    CHECK(term_str("f((a, b)).") ==
          "program([fact(compound(atom(f), [infix(,, xfy, atom(a), atom(b))]))])");
}

TEST_CASE("zero-argument compounds are dialect-gated") {
    Parsed iso = parse("x(pi()).");
    CHECK_FALSE(iso.outcome.ok());
    CHECK(term_str("x(pi()).", DialectOptions::swi()) ==
          "program([fact(compound(atom(x), [compound(atom(pi), [])]))])");
}

TEST_CASE("argument priority above 999 is dialect-gated") {
    Parsed iso = parse("x([a :- b]).");
    CHECK_FALSE(iso.outcome.ok());
    CHECK(term_str("x([a :- b]).", DialectOptions::swi()) ==
          "program([fact(compound(atom(x), [list([infix(:-, xfx, atom(a), atom(b))])]))])");
    CHECK(term_str("x([(a :- b)]).") ==
          "program([fact(compound(atom(x), [list([infix(:-, xfx, atom(a), atom(b))])]))])");
}

TEST_CASE("dicts") {
    DialectOptions swi = DialectOptions::swi();
    CHECK(term_str("x(point{a: 1}).", swi) ==
          "program([fact(compound(atom(x), [dict(atom(point), [atom(a)-integer(1)])]))])");
    CHECK(term_str("x(_{}).", swi) ==
          "program([fact(compound(atom(x), [dict(variable('_'), [])]))])");
    CHECK(term_str("x(point{a: 1, b: f(2)}).", swi) ==
          "program([fact(compound(atom(x), [dict(atom(point), [atom(a)-integer(1), "
          "atom(b)-compound(atom(f), [integer(2)])])]))])");
    Parsed iso = parse("x(point{a: 1}).");
    CHECK_FALSE(iso.outcome.ok());
    Parsed malformed = parse("x(point{a}).", swi);
    CHECK_FALSE(malformed.outcome.ok());
}

TEST_CASE("op directives take effect for later clauses") {
    Parsed p = parse(":- op(700, xfx, ===).\nx(a === b).\n");
    REQUIRE(p.outcome.ok());
    auto ast = cst_to_ast(*p.outcome.cst, DialectOptions::iso());
    CHECK(ast_term_string(*ast.ast) ==
          "program([directive(compound(atom(op), [integer(700), atom(xfx), atom(===)])), "
          "fact(compound(atom(x), [infix(===, xfx, atom(a), atom(b))]))])");
    CHECK(p.outcome.table_final.is_operator("==="));

    // before the directive the operator is unknown
    Parsed before = parse("x(a === b).\n:- op(700, xfx, ===).\n");
    CHECK_FALSE(before.outcome.ok());
}

TEST_CASE("invalid op directives are reported") {
    Parsed p = parse(":- op(1300, xfx, bad).\na.\n");
    CHECK_FALSE(p.outcome.ok());
    REQUIRE(p.outcome.errors.size() == 1);
    CHECK(p.outcome.errors[0].message.find("op directive") != std::string::npos);
}

TEST_CASE("clause-level error recovery") {
    Parsed p = parse("good(1).\nbad syntax here.\nalso_good(2).\n");
    REQUIRE(p.outcome.errors.size() == 1);
    auto ast = cst_to_ast(*p.outcome.cst, DialectOptions::iso());
    CHECK(ast_term_string(*ast.ast) ==
          "program([fact(compound(atom(good), [integer(1)])), "
          "fact(compound(atom(also_good), [integer(2)]))])");
    // the raw bytes survive in the tree
    CHECK(serialize_cst(*p.outcome.cst) == "good(1).\nbad syntax here.\nalso_good(2).\n");
}

TEST_CASE("juxtaposition fails without deduction and parses with it") {
    Parsed plain = parse("a b.");
    CHECK_FALSE(plain.outcome.ok());

    DialectOptions deducing = DialectOptions::iso();
    deducing.deduce_operators = true;
    Parsed p = parse("a b.", deducing);
    REQUIRE(p.outcome.ok());
    REQUIRE(p.outcome.deduced_ops.size() == 1);
    const OpDef& def = p.outcome.deduced_ops[0];
    bool prefix_a = def.name == "a" && is_prefix_specifier(def.specifier);
    bool postfix_b = def.name == "b" && is_postfix_specifier(def.specifier);
    CHECK((prefix_a || postfix_b));
    CHECK(p.outcome.table_final.is_operator(def.name));
}

TEST_CASE("deduced operators stay empty when deduction is off") {
    Parsed p = parse("x(1).");
    CHECK(p.outcome.deduced_ops.empty());
}

TEST_CASE("byte-exact CST serialization") {
    std::string src = "% header\nfoo( X ) :-  bar(X) ,\n\tbaz( X ).  /* tail */\n";
    Parsed p = parse(src);
    REQUIRE(p.outcome.ok());
    CHECK(serialize_cst(*p.outcome.cst) == src);
}

TEST_CASE("iso programs parse identically under swi") {
    const char* programs[] = {
        "a.\n",
        "f(X) :- g(X), h(X, [1|T]).\n",
        "x(1+2*3).\n",
        ":- op(700, xfx, ===).\ny(a === b).\n",
        "p :- (q ; r), \\+ s.\n",
    };
    for (const char* src : programs) {
        auto iso_ast = ast_of(src, DialectOptions::iso());
        auto swi_ast = ast_of(src, DialectOptions::swi());
        CHECK(ast_equal(*iso_ast, *swi_ast));
    }
}

TEST_CASE("parse_term consumes exactly one term") {
    DialectOptions d = DialectOptions::iso();
    LexResult lexed = tokenize("1+2 rest", d);
    REQUIRE(lexed.ok());
    ParseError err;
    auto r = parse_term(lexed.tokens, 1200, OperatorTable::standard(d.profile), d, err);
    REQUIRE(r.has_value());
    CHECK(r->consumed == 3);
    ParseError err2;
    auto limited = parse_term(lexed.tokens, 400, OperatorTable::standard(d.profile), d, err2);
    REQUIRE(limited.has_value());
    CHECK(limited->consumed == 1);  // the '+' at 500 exceeds the bound
}

TEST_CASE("error spans point at the offending token") {
    Parsed p = parse("f(1,, 2).");
    REQUIRE_FALSE(p.outcome.ok());
    CHECK(p.outcome.errors[0].span.line_start == 1);
    CHECK(p.outcome.errors[0].span.col_start == 5);
}
