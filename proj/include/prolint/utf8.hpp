#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace prolint::utf8 {

constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes one codepoint at byte offset `i`. Returns kInvalid and length 1 on
// malformed input (overlong forms, truncated sequences, surrogates).
struct Decoded {
    char32_t cp;
    int len;
};
Decoded decode(std::string_view text, std::size_t i);

void encode(char32_t cp, std::string& out);

// Character classes over full codepoints. ASCII follows the usual lexical
// classes; the non-ASCII alphabetic blocks cover Latin-1, Latin Extended-A,
// Greek and Cyrillic, which is enough for identifier classification. Anything
// else above ASCII counts as a lowercase-like letter so it can appear in
// unquoted atoms.
bool is_capital_letter(char32_t cp);
bool is_small_letter(char32_t cp);
bool is_letter(char32_t cp);
bool is_decimal_digit(char32_t cp);
bool is_alphanumeric(char32_t cp);  // letter, digit or underscore

}  // namespace prolint::utf8
