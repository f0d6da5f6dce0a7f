#include "prolint/utf8.hpp"

namespace prolint::utf8 {

Decoded decode(std::string_view text, std::size_t i) {
    if (i >= text.size()) return {kInvalid, 0};
    auto byte = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
    unsigned char b0 = byte(i);
    if (b0 < 0x80) return {b0, 1};
    auto cont = [&](std::size_t k) { return k < text.size() && (byte(k) & 0xC0) == 0x80; };
    if ((b0 & 0xE0) == 0xC0) {
        if (!cont(i + 1)) return {kInvalid, 1};
        char32_t cp = ((b0 & 0x1Fu) << 6) | (byte(i + 1) & 0x3Fu);
        if (cp < 0x80) return {kInvalid, 1};  // overlong
        return {cp, 2};
    }
    if ((b0 & 0xF0) == 0xE0) {
        if (!cont(i + 1) || !cont(i + 2)) return {kInvalid, 1};
        char32_t cp = ((b0 & 0x0Fu) << 12) | ((byte(i + 1) & 0x3Fu) << 6) | (byte(i + 2) & 0x3Fu);
        if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) return {kInvalid, 1};
        return {cp, 3};
    }
    if ((b0 & 0xF8) == 0xF0) {
        if (!cont(i + 1) || !cont(i + 2) || !cont(i + 3)) return {kInvalid, 1};
        char32_t cp = ((b0 & 0x07u) << 18) | ((byte(i + 1) & 0x3Fu) << 12) |
                      ((byte(i + 2) & 0x3Fu) << 6) | (byte(i + 3) & 0x3Fu);
        if (cp < 0x10000 || cp > 0x10FFFF) return {kInvalid, 1};
        return {cp, 4};
    }
    return {kInvalid, 1};
}

void encode(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

namespace {

struct Range {
    char32_t lo, hi;
};

// Uppercase blocks with contiguous case: Latin-1, Greek, Cyrillic.
constexpr Range kUpperRanges[] = {
    {U'A', U'Z'},
    {0x00C0, 0x00D6},
    {0x00D8, 0x00DE},
    {0x0391, 0x03A1},
    {0x03A3, 0x03AB},
    {0x0400, 0x042F},
};

bool in_ranges(char32_t cp, const Range* ranges, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (cp >= ranges[i].lo && cp <= ranges[i].hi) return true;
    return false;
}

}  // namespace

bool is_capital_letter(char32_t cp) {
    return in_ranges(cp, kUpperRanges, sizeof(kUpperRanges) / sizeof(kUpperRanges[0]));
}

bool is_small_letter(char32_t cp) {
    if (cp >= U'a' && cp <= U'z') return true;
    if (cp < 0x80) return false;
    return !is_capital_letter(cp);
}

bool is_letter(char32_t cp) {
    return is_small_letter(cp) || is_capital_letter(cp);
}

bool is_decimal_digit(char32_t cp) {
    return cp >= U'0' && cp <= U'9';
}

bool is_alphanumeric(char32_t cp) {
    if (cp == U'_') return true;
    if (cp < 0x80) return is_decimal_digit(cp) || is_letter(cp);
    return true;  // any non-ASCII continues an identifier
}

}  // namespace prolint::utf8
