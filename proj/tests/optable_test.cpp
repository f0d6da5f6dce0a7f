#include <doctest.h>

#include "prolint/optable.hpp"

using namespace prolint;

TEST_CASE("standard table carries the mandated definitions") {
    OperatorTable iso = OperatorTable::standard(DialectProfile::iso);
    auto comma = iso.infix_postfix(",");
    REQUIRE(comma.has_value());
    CHECK(comma->priority == 1000);
    CHECK(comma->specifier == OpSpecifier::xfy);

    auto neck_infix = iso.infix_postfix(":-");
    auto neck_prefix = iso.prefix(":-");
    REQUIRE(neck_infix.has_value());
    REQUIRE(neck_prefix.has_value());
    CHECK(neck_infix->priority == 1200);
    CHECK(neck_infix->specifier == OpSpecifier::xfx);
    CHECK(neck_prefix->priority == 1200);
    CHECK(neck_prefix->specifier == OpSpecifier::fx);

    CHECK(iso.infix_postfix("nonexistent_op") == std::nullopt);
    CHECK(iso.prefix("nonexistent_op") == std::nullopt);
    CHECK_FALSE(iso.is_operator("nonexistent_op"));

    auto minus_prefix = iso.prefix("-");
    REQUIRE(minus_prefix.has_value());
    CHECK(minus_prefix->priority == 200);
    CHECK(minus_prefix->specifier == OpSpecifier::fy);

    // SWI extras are not in the iso table
    CHECK_FALSE(iso.is_operator("dynamic"));
    OperatorTable swi = OperatorTable::standard(DialectProfile::swi);
    REQUIRE(swi.prefix("dynamic").has_value());
    CHECK(swi.prefix("dynamic")->priority == 1150);
}

TEST_CASE("op directive inserts and overwrites") {
    OperatorTable table = OperatorTable::standard(DialectProfile::iso);
    auto r = apply_op_directive(table, 700, OpSpecifier::xfx, {"==="});
    REQUIRE_FALSE(r.error.has_value());
    auto def = r.table.infix_postfix("===");
    REQUIRE(def.has_value());
    CHECK(def->priority == 700);
    // original table unchanged
    CHECK_FALSE(table.is_operator("==="));

    auto overwrite = apply_op_directive(r.table, 650, OpSpecifier::xfy, {"==="});
    REQUIRE_FALSE(overwrite.error.has_value());
    CHECK(overwrite.table.infix_postfix("===")->priority == 650);
}

TEST_CASE("priority zero removes only the matching slot") {
    OperatorTable table = OperatorTable::standard(DialectProfile::iso);
    auto removed = apply_op_directive(table, 0, OpSpecifier::yfx, {"+"});
    REQUIRE_FALSE(removed.error.has_value());
    CHECK(removed.table.infix_postfix("+") == std::nullopt);
    // '-' untouched; '+' has no iso prefix definition to begin with
    CHECK(removed.table.infix_postfix("-").has_value());
    CHECK(removed.table.prefix("-").has_value());

    // removing also restores: re-adding the original definition round-trips
    auto readded = apply_op_directive(removed.table, 500, OpSpecifier::yfx, {"+"});
    REQUIRE_FALSE(readded.error.has_value());
    CHECK(readded.table.all() == table.all());
}

TEST_CASE("op directive errors") {
    OperatorTable table = OperatorTable::standard(DialectProfile::iso);
    CHECK(apply_op_directive(table, 1300, OpSpecifier::xfx, {"bad"}).error.has_value());
    CHECK(apply_op_directive(table, -1, OpSpecifier::xfx, {"bad"}).error.has_value());
    CHECK(apply_op_directive(table, 700, OpSpecifier::xfx, {","}).error.has_value());
    CHECK(apply_op_directive(table, 0, OpSpecifier::xfy, {","}).error.has_value());
    CHECK(apply_op_directive(table, 200, OpSpecifier::xf, {"[]"}).error.has_value());
    CHECK(apply_op_directive(table, 200, OpSpecifier::xf, {"{}"}).error.has_value());
    // '=' is infix; defining a postfix for it must fail
    CHECK(apply_op_directive(table, 200, OpSpecifier::xf, {"="}).error.has_value());
    // but a prefix definition for it is fine
    CHECK_FALSE(apply_op_directive(table, 200, OpSpecifier::fy, {"="}).error.has_value());
    // '|' restrictions
    CHECK(apply_op_directive(table, 200, OpSpecifier::xfy, {"|"}).error.has_value());
    CHECK_FALSE(apply_op_directive(table, 1100, OpSpecifier::xfy, {"|"}).error.has_value());
}

TEST_CASE("multiple names in one directive") {
    OperatorTable table = OperatorTable::standard(DialectProfile::iso);
    auto r = apply_op_directive(table, 600, OpSpecifier::xfx, {"op_a", "op_b", "op_c"});
    REQUIRE_FALSE(r.error.has_value());
    CHECK(r.table.is_operator("op_a"));
    CHECK(r.table.is_operator("op_b"));
    CHECK(r.table.is_operator("op_c"));
}

TEST_CASE("dialect profiles") {
    DialectOptions iso = DialectOptions::iso();
    CHECK_FALSE(iso.dicts);
    CHECK_FALSE(iso.digit_groups);
    CHECK_FALSE(iso.deduce_operators);

    DialectOptions swi = DialectOptions::swi();
    CHECK(swi.dicts);
    CHECK(swi.allow_compounds_with_zero_arguments);
    CHECK(swi.allow_arg_precedence_geq_1000);
    CHECK(swi.allow_operator_as_operand);
    CHECK(swi.allow_integer_exponential_notation);
    CHECK(swi.digit_groups);
    CHECK(swi.shebang);
    CHECK(swi.unicode_character_escape);
    CHECK(swi.missing_closing_backslash);
    CHECK(swi.single_quote_char_constant);
    CHECK(swi.tab_in_quotes);
    CHECK(swi.nested_block_comments);
    CHECK_FALSE(swi.deduce_operators);  // stays off even in the swi profile

    DialectOptions d = DialectOptions::iso();
    CHECK(d.set_flag("dicts", true));
    CHECK(d.dicts);
    CHECK_FALSE(d.set_flag("no_such_flag", true));
}
