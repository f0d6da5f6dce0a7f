#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace prolint {

// Half-open byte range plus 1-based line/column positions. Columns count
// decoded characters, not bytes; *_end fields point one past the last
// character.
struct SourceSpan {
    std::size_t byte_start = 0;
    std::size_t byte_end = 0;
    int line_start = 1;
    int col_start = 1;
    int line_end = 1;
    int col_end = 1;
};

inline SourceSpan join_spans(const SourceSpan& a, const SourceSpan& b) {
    SourceSpan s = a;
    if (b.byte_start < s.byte_start) {
        s.byte_start = b.byte_start;
        s.line_start = b.line_start;
        s.col_start = b.col_start;
    }
    if (b.byte_end > s.byte_end) {
        s.byte_end = b.byte_end;
        s.line_end = b.line_end;
        s.col_end = b.col_end;
    }
    return s;
}

// Splits source into physical lines, newline characters removed. The final
// line is present even when empty only if the text does not end in '\n'.
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace prolint
