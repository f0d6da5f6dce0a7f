#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prolint/ast.hpp"
#include "prolint/diagnostic.hpp"

namespace prolint {

enum class NamingStyle { underscore, camel_case, consistent };

struct QualityOptions {
    std::optional<NamingStyle> predicate_naming_style;  // cov_3_1; nullopt = off
    std::optional<NamingStyle> variable_naming_style;   // cov_3_4
    bool naming_convention_3_12 = false;                // cov_3_12
    std::string pattern_3_12 = "^[a-z][a-zA-Z0-9_]*$";
};

enum class WordStyle { underscore, camel_case, single_word, mixed };

const char* word_style_name(WordStyle style);

struct IdentifierWords {
    std::vector<std::string> words;
    WordStyle style;
};

// Splits on '_' and on lower-to-upper transitions. underscore means strictly
// lowercase words joined by '_'; camel_case means an interior case change
// and no '_'.
IdentifierWords identifier_words(std::string_view name);

// Variable names force an uppercase start, so word-initial capitals do not
// count against the underscore style here ("My_Var" is underscore-styled,
// "MyVar" camel-cased).
WordStyle variable_word_style(std::string_view name);

std::vector<Diagnostic> check_quality(const AstWithOrigin& ast, const QualityOptions& options,
                                      const std::string& file);

}  // namespace prolint
