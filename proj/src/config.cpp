#include "prolint/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

namespace prolint {

Config Config::defaults() {
    Config c;
    c.dialect = DialectOptions::swi();
    c.style.max_line_length = StyleOption<int>::check(80);
    c.style.space_after_arglist_comma = StyleOption<bool>::check(true);
    c.style.newline_after_clause = StyleOption<bool>::check(true);
    c.style.newline_after_rule_op = StyleOption<bool>::check(true);
    c.style.newline_after_subgoal = StyleOption<bool>::check(true);
    c.style.no_trailing_whitespace = StyleOption<bool>::check(true);
    return c;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::optional<long> parse_int(std::string_view v) {
    long out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) return std::nullopt;
    return out;
}

std::optional<bool> parse_yes_no(std::string_view v) {
    if (v == "yes" || v == "true" || v == "on") return true;
    if (v == "no" || v == "false") return false;
    return std::nullopt;
}

ConfigError bad_value(std::string_view key, std::string_view value, const char* expected) {
    return ConfigError{"invalid value '" + std::string(value) + "' for " + std::string(key) +
                       " (expected " + expected + ")"};
}

std::optional<ConfigError> set_bool_option(StyleOption<bool>& opt, std::string_view key,
                                           std::string_view value) {
    if (value == "off") {
        opt = StyleOption<bool>::off();
        return std::nullopt;
    }
    if (value == "infer") {
        opt = StyleOption<bool>::infer();
        return std::nullopt;
    }
    if (auto b = parse_yes_no(value)) {
        opt = StyleOption<bool>::check(*b);
        return std::nullopt;
    }
    return bad_value(key, value, "yes, no, off or infer");
}

std::optional<ConfigError> set_int_option(StyleOption<int>& opt, std::string_view key,
                                          std::string_view value, long lo, long hi) {
    if (value == "off") {
        opt = StyleOption<int>::off();
        return std::nullopt;
    }
    if (value == "infer") {
        opt = StyleOption<int>::infer();
        return std::nullopt;
    }
    if (auto n = parse_int(value); n && *n >= lo && *n <= hi) {
        opt = StyleOption<int>::check(static_cast<int>(*n));
        return std::nullopt;
    }
    return bad_value(key, value, "an integer, off or infer");
}

std::optional<NamingStyle> parse_naming(std::string_view v) {
    if (v == "underscore") return NamingStyle::underscore;
    if (v == "camel_case") return NamingStyle::camel_case;
    if (v == "consistent") return NamingStyle::consistent;
    return std::nullopt;
}

}  // namespace

std::optional<ConfigError> apply_setting(Config& config, std::string_view key,
                                         std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (key.empty()) return ConfigError{"empty option name"};

    if (key == "dialect") {
        auto profile = parse_profile(value);
        if (!profile) return bad_value(key, value, "iso or swi");
        config.dialect = *profile == DialectProfile::iso ? DialectOptions::iso()
                                                         : DialectOptions::swi();
        return std::nullopt;
    }
    if (auto b = parse_yes_no(value); b && config.dialect.set_flag(key, *b)) return std::nullopt;
    if (std::find(DialectOptions::flag_names().begin(), DialectOptions::flag_names().end(),
                  std::string(key)) != DialectOptions::flag_names().end())
        return bad_value(key, value, "yes or no");

    if (key == "indent") {
        if (value == "off")
            config.style.indent = StyleOption<IndentValue>::off();
        else if (value == "infer")
            config.style.indent = StyleOption<IndentValue>::infer();
        else if (value == "tab")
            config.style.indent = StyleOption<IndentValue>::check({true, 1});
        else if (auto n = parse_int(value); n && *n >= 1 && *n <= 16)
            config.style.indent = StyleOption<IndentValue>::check({false, static_cast<int>(*n)});
        else
            return bad_value(key, value, "1..16, tab, off or infer");
        return std::nullopt;
    }
    if (key == "max_line_length")
        return set_int_option(config.style.max_line_length, key, value, 1, 10000);
    if (key == "max_subgoals")
        return set_int_option(config.style.max_subgoals, key, value, 0, 1000000);
    if (key == "max_rule_lines")
        return set_int_option(config.style.max_rule_lines, key, value, 1, 1000000);
    if (key == "space_after_arglist_comma")
        return set_bool_option(config.style.space_after_arglist_comma, key, value);
    if (key == "newline_after_clause")
        return set_bool_option(config.style.newline_after_clause, key, value);
    if (key == "newline_after_rule_op")
        return set_bool_option(config.style.newline_after_rule_op, key, value);
    if (key == "newline_after_subgoal")
        return set_bool_option(config.style.newline_after_subgoal, key, value);
    if (key == "indent_between_repeat_cut")
        return set_bool_option(config.style.indent_between_repeat_cut, key, value);
    if (key == "no_trailing_whitespace")
        return set_bool_option(config.style.no_trailing_whitespace, key, value);

    if (key == "predicate_naming_style" || key == "variable_naming_style") {
        auto& slot = key == "predicate_naming_style" ? config.quality.predicate_naming_style
                                                     : config.quality.variable_naming_style;
        if (value == "off") {
            slot.reset();
            return std::nullopt;
        }
        auto style = parse_naming(value);
        if (!style) return bad_value(key, value, "off, underscore, camel_case or consistent");
        slot = *style;
        return std::nullopt;
    }
    if (key == "naming_convention_3_12") {
        if (value == "off") {
            config.quality.naming_convention_3_12 = false;
            return std::nullopt;
        }
        if (value == "enabled") {
            config.quality.naming_convention_3_12 = true;
            return std::nullopt;
        }
        return bad_value(key, value, "off or enabled");
    }
    if (key == "naming_convention_3_12_pattern") {
        try {
            std::regex probe{std::string(value)};
        } catch (const std::regex_error&) {
            return bad_value(key, value, "a valid regular expression");
        }
        config.quality.pattern_3_12 = std::string(value);
        return std::nullopt;
    }

    if (key == "timeout_seconds") {
        try {
            config.limits.timeout_seconds = std::stod(std::string(value));
        } catch (...) {
            return bad_value(key, value, "a number of seconds");
        }
        if (config.limits.timeout_seconds < 0) return bad_value(key, value, "a non-negative number");
        return std::nullopt;
    }
    if (key == "max_bytes") {
        if (auto n = parse_int(value); n && *n >= 0) {
            config.limits.max_bytes = static_cast<std::size_t>(*n);
            return std::nullopt;
        }
        return bad_value(key, value, "a byte count");
    }
    if (key == "max_lines") {
        if (auto n = parse_int(value); n && *n >= 0) {
            config.limits.max_lines = *n;
            return std::nullopt;
        }
        return bad_value(key, value, "a line count");
    }
    if (key == "long_line_limit") {
        if (auto n = parse_int(value); n && *n >= 1) {
            config.limits.long_line_limit = static_cast<int>(*n);
            return std::nullopt;
        }
        return bad_value(key, value, "a character count");
    }
    if (key == "format") {
        if (value == "text" || value == "json") {
            config.format = std::string(value);
            return std::nullopt;
        }
        return bad_value(key, value, "text or json");
    }
    return ConfigError{"unknown option '" + std::string(key) + "'"};
}

std::optional<ConfigError> load_config_file(Config& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return ConfigError{"cannot read config file " + path.string()};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty() || view.front() == '#') continue;
        auto eq = view.find('=');
        if (eq == std::string_view::npos)
            return ConfigError{path.string() + ":" + std::to_string(line_no) +
                               ": expected 'key = value'"};
        if (auto err = apply_setting(config, view.substr(0, eq), view.substr(eq + 1)))
            return ConfigError{path.string() + ":" + std::to_string(line_no) + ": " +
                               err->message};
    }
    return std::nullopt;
}

std::optional<std::filesystem::path> discover_config(const std::filesystem::path& start) {
    std::error_code ec;
    std::filesystem::path dir = std::filesystem::absolute(start, ec);
    if (ec) return std::nullopt;
    if (!std::filesystem::is_directory(dir, ec)) dir = dir.parent_path();
    while (true) {
        std::filesystem::path candidate = dir / ".prolintrc";
        if (std::filesystem::is_regular_file(candidate, ec)) return candidate;
        std::filesystem::path parent = dir.parent_path();
        if (parent == dir) return std::nullopt;
        dir = parent;
    }
}

}  // namespace prolint
