#include "prolint/dialect.hpp"

#include <utility>

namespace prolint {

DialectOptions DialectOptions::iso() {
    return DialectOptions{};
}

DialectOptions DialectOptions::swi() {
    DialectOptions d;
    d.dicts = true;
    d.allow_compounds_with_zero_arguments = true;
    d.allow_arg_precedence_geq_1000 = true;
    d.allow_operator_as_operand = true;
    d.allow_integer_exponential_notation = true;
    d.digit_groups = true;
    d.shebang = true;
    d.unicode_character_escape = true;
    d.missing_closing_backslash = true;
    d.single_quote_char_constant = true;
    d.tab_in_quotes = true;
    d.nested_block_comments = true;
    d.deduce_operators = false;
    d.profile = DialectProfile::swi;
    return d;
}

namespace {

using Field = bool DialectOptions::*;

const std::pair<const char*, Field> kFlags[] = {
    {"dicts", &DialectOptions::dicts},
    {"allow_compounds_with_zero_arguments", &DialectOptions::allow_compounds_with_zero_arguments},
    {"allow_arg_precedence_geq_1000", &DialectOptions::allow_arg_precedence_geq_1000},
    {"allow_operator_as_operand", &DialectOptions::allow_operator_as_operand},
    {"allow_integer_exponential_notation", &DialectOptions::allow_integer_exponential_notation},
    {"digit_groups", &DialectOptions::digit_groups},
    {"shebang", &DialectOptions::shebang},
    {"unicode_character_escape", &DialectOptions::unicode_character_escape},
    {"missing_closing_backslash", &DialectOptions::missing_closing_backslash},
    {"single_quote_char_constant", &DialectOptions::single_quote_char_constant},
    {"tab_in_quotes", &DialectOptions::tab_in_quotes},
    {"nested_block_comments", &DialectOptions::nested_block_comments},
    {"deduce_operators", &DialectOptions::deduce_operators},
};

}  // namespace

bool DialectOptions::set_flag(std::string_view name, bool value) {
    for (const auto& [flag, field] : kFlags) {
        if (name == flag) {
            this->*field = value;
            return true;
        }
    }
    return false;
}

const std::vector<std::string>& DialectOptions::flag_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [flag, field] : kFlags) v.emplace_back(flag);
        return v;
    }();
    return names;
}

std::optional<DialectProfile> parse_profile(std::string_view name) {
    if (name == "iso") return DialectProfile::iso;
    if (name == "swi") return DialectProfile::swi;
    return std::nullopt;
}

const char* profile_name(DialectProfile profile) {
    return profile == DialectProfile::iso ? "iso" : "swi";
}

}  // namespace prolint
