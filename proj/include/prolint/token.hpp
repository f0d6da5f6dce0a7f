#pragma once

#include <string>
#include <vector>

#include "prolint/source.hpp"

namespace prolint {

enum class LayoutKind {
    space,
    tab,
    newline,
    line_comment,
    block_comment,
    shebang,
};

struct LayoutItem {
    LayoutKind kind;
    std::string text;  // verbatim characters
    SourceSpan span;
};

enum class TokenKind {
    name,
    variable,
    integer,
    floating,
    double_quoted,
    back_quoted,
    char_code_constant,
    open_paren,
    open_ct,  // '(' directly after a functor-like token, no layout between
    close_paren,
    open_list,
    close_list,
    open_curly,
    close_curly,
    comma,
    bar,
    end,
    dict_open,  // '{' directly after a tag token, dicts dialect only
};

const char* token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string text;  // verbatim characters
    SourceSpan span;
    std::vector<LayoutItem> layout_before;

    bool has_layout_before() const { return !layout_before.empty(); }
    bool is_name(std::string_view t) const {
        return kind == TokenKind::name && text == t;
    }
};

}  // namespace prolint
