#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "prolint/corpus.hpp"
#include "prolint/dialect.hpp"
#include "prolint/quality.hpp"
#include "prolint/style.hpp"

namespace prolint {

struct ConfigError {
    std::string message;
};

struct Config {
    DialectOptions dialect = DialectOptions::swi();
    StyleOptions style;
    QualityOptions quality;
    Limits limits;
    std::string format = "text";

    // lint defaults: the line-local rules on, metric limits off, naming off
    static Config defaults();
};

// One "key = value" assignment; unknown keys and malformed values are
// errors. Precedence (profile < config file < --set) is the caller's
// responsibility via application order.
std::optional<ConfigError> apply_setting(Config& config, std::string_view key,
                                         std::string_view value);

std::optional<ConfigError> load_config_file(Config& config, const std::filesystem::path& path);

// Nearest .prolintrc walking upward from `start` (a file or directory).
std::optional<std::filesystem::path> discover_config(const std::filesystem::path& start);

}  // namespace prolint
