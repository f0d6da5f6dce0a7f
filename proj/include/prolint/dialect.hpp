#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prolint {

enum class DialectProfile { iso, swi };

// Switchable non-ISO language features. The iso profile turns everything
// off; the swi profile enables every extension except operator deduction,
// which widens the parser's search space and stays opt-in.
struct DialectOptions {
    bool dicts = false;
    bool allow_compounds_with_zero_arguments = false;
    bool allow_arg_precedence_geq_1000 = false;
    bool allow_operator_as_operand = false;
    bool allow_integer_exponential_notation = false;
    bool digit_groups = false;
    bool shebang = false;
    bool unicode_character_escape = false;
    bool missing_closing_backslash = false;
    bool single_quote_char_constant = false;
    bool tab_in_quotes = false;
    bool nested_block_comments = false;
    bool deduce_operators = false;

    DialectProfile profile = DialectProfile::iso;

    static DialectOptions iso();
    static DialectOptions swi();

    // Flag registry: open-ended name -> field mapping used by config files
    // and --set. Returns false for unknown flag names.
    bool set_flag(std::string_view name, bool value);
    static const std::vector<std::string>& flag_names();
};

std::optional<DialectProfile> parse_profile(std::string_view name);
const char* profile_name(DialectProfile profile);

}  // namespace prolint
