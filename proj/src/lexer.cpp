#include "prolint/lexer.hpp"

#include <cstdint>
#include <stdexcept>

#include "prolint/utf8.hpp"

namespace prolint {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::name: return "name";
        case TokenKind::variable: return "variable";
        case TokenKind::integer: return "integer";
        case TokenKind::floating: return "float";
        case TokenKind::double_quoted: return "double_quoted";
        case TokenKind::back_quoted: return "back_quoted";
        case TokenKind::char_code_constant: return "char_code_constant";
        case TokenKind::open_paren: return "open_paren";
        case TokenKind::open_ct: return "open_ct";
        case TokenKind::close_paren: return "close_paren";
        case TokenKind::open_list: return "open_list";
        case TokenKind::close_list: return "close_list";
        case TokenKind::open_curly: return "open_curly";
        case TokenKind::close_curly: return "close_curly";
        case TokenKind::comma: return "comma";
        case TokenKind::bar: return "bar";
        case TokenKind::end: return "end";
        case TokenKind::dict_open: return "dict_open";
    }
    return "?";
}

namespace {

bool is_graphic_char(char32_t c) {
    switch (c) {
        case U'#': case U'$': case U'&': case U'*': case U'+': case U'-':
        case U'.': case U'/': case U':': case U'<': case U'=': case U'>':
        case U'?': case U'@': case U'^': case U'~':
            return true;
        default:
            return false;
    }
}

bool is_graphic_token_char(char32_t c) {
    return is_graphic_char(c) || c == U'\\';
}

bool is_layout_char(char32_t c) {
    return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v';
}

bool is_hex_digit(char32_t c) {
    return (c >= U'0' && c <= U'9') || (c >= U'a' && c <= U'f') || (c >= U'A' && c <= U'F');
}

bool is_octal_digit(char32_t c) {
    return c >= U'0' && c <= U'7';
}

struct Cursor {
    std::size_t byte = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    Lexer(std::string_view src, const DialectOptions& dialect) : src_(src), dialect_(dialect) {}

    LexResult run() {
        LexResult result;
        std::vector<LayoutItem> layout;
        while (true) {
            if (!scan_layout(layout)) {
                result.error = std::move(error_);
                result.tokens = std::move(tokens_);
                return result;
            }
            if (at_end()) break;
            Token tok;
            tok.layout_before = std::move(layout);
            layout.clear();
            if (!scan_token(tok)) {
                result.error = std::move(error_);
                result.tokens = std::move(tokens_);
                return result;
            }
            tokens_.push_back(std::move(tok));
        }
        result.tokens = std::move(tokens_);
        result.trailing = std::move(layout);
        return result;
    }

private:
    std::string_view src_;
    const DialectOptions& dialect_;
    Cursor cur_;
    std::vector<Token> tokens_;
    std::optional<LexError> error_;

    bool at_end() const { return cur_.byte >= src_.size(); }

    char32_t peek(int ahead = 0) const {
        std::size_t i = cur_.byte;
        for (int k = 0; k < ahead; ++k) {
            auto d = utf8::decode(src_, i);
            if (d.len == 0) return utf8::kInvalid;
            i += static_cast<std::size_t>(d.len);
        }
        auto d = utf8::decode(src_, i);
        return d.len == 0 ? utf8::kInvalid : d.cp;
    }

    // Raw byte peek for ASCII-only decisions.
    char peek_byte(std::size_t ahead = 0) const {
        std::size_t i = cur_.byte + ahead;
        return i < src_.size() ? src_[i] : '\0';
    }

    void advance() {
        auto d = utf8::decode(src_, cur_.byte);
        if (d.cp == U'\n') {
            ++cur_.line;
            cur_.col = 1;
        } else {
            ++cur_.col;
        }
        cur_.byte += static_cast<std::size_t>(d.len);
    }

    SourceSpan span_from(const Cursor& start) const {
        return {start.byte, cur_.byte, start.line, start.col, cur_.line, cur_.col};
    }

    std::string_view text_from(const Cursor& start) const {
        return src_.substr(start.byte, cur_.byte - start.byte);
    }

    bool fail(std::string message, const Cursor& start) {
        error_ = LexError{std::move(message), span_from(start)};
        return false;
    }

    bool check_valid_char(const Cursor& start) {
        auto d = utf8::decode(src_, cur_.byte);
        if (d.cp == utf8::kInvalid) return fail("invalid UTF-8 sequence", start);
        return true;
    }

    // --- layout ---------------------------------------------------------

    bool scan_layout(std::vector<LayoutItem>& out) {
        while (!at_end()) {
            Cursor start = cur_;
            char32_t c = peek();
            if (c == utf8::kInvalid) return fail("invalid UTF-8 sequence", start);
            if (c == U' ' || c == U'\t') {
                while (!at_end() && peek() == c) advance();
                out.push_back({c == U' ' ? LayoutKind::space : LayoutKind::tab,
                               std::string(text_from(start)), span_from(start)});
                continue;
            }
            if (c == U'\n' || c == U'\r') {
                advance();
                if (c == U'\r' && !at_end() && peek() == U'\n') advance();
                out.push_back({LayoutKind::newline, std::string(text_from(start)), span_from(start)});
                continue;
            }
            if (c == U'\f' || c == U'\v') {
                advance();
                out.push_back({LayoutKind::space, std::string(text_from(start)), span_from(start)});
                continue;
            }
            if (c == U'%') {
                while (!at_end() && peek() != U'\n' && peek() != U'\r') {
                    if (!check_valid_char(start)) return false;
                    advance();
                }
                out.push_back({LayoutKind::line_comment, std::string(text_from(start)), span_from(start)});
                continue;
            }
            if (c == U'/' && peek_byte(1) == '*') {
                if (!scan_block_comment(out)) return false;
                continue;
            }
            if (c == U'#' && cur_.byte == 0 && peek_byte(1) == '!' && dialect_.shebang) {
                while (!at_end() && peek() != U'\n' && peek() != U'\r') {
                    if (!check_valid_char(start)) return false;
                    advance();
                }
                out.push_back({LayoutKind::shebang, std::string(text_from(start)), span_from(start)});
                continue;
            }
            break;
        }
        return true;
    }

    bool scan_block_comment(std::vector<LayoutItem>& out) {
        Cursor start = cur_;
        advance();  // '/'
        advance();  // '*'
        int depth = 1;
        while (depth > 0) {
            if (at_end()) return fail("unterminated block comment", start);
            char32_t c = peek();
            if (c == utf8::kInvalid) return fail("invalid UTF-8 sequence", start);
            if (c == U'*' && peek_byte(1) == '/') {
                advance();
                advance();
                --depth;
            } else if (dialect_.nested_block_comments && c == U'/' && peek_byte(1) == '*') {
                advance();
                advance();
                ++depth;
            } else {
                advance();
            }
        }
        out.push_back({LayoutKind::block_comment, std::string(text_from(start)), span_from(start)});
        return true;
    }

    // --- tokens ---------------------------------------------------------

    bool scan_token(Token& tok) {
        Cursor start = cur_;
        char32_t c = peek();
        bool ok;
        if (utf8::is_small_letter(c)) {
            ok = scan_letter_digit_name(tok);
        } else if (utf8::is_capital_letter(c) || c == U'_') {
            ok = scan_variable(tok);
        } else if (utf8::is_decimal_digit(c)) {
            ok = scan_number(tok);
        } else if (c == U'\'') {
            ok = scan_quoted(tok, U'\'', TokenKind::name);
        } else if (c == U'"') {
            ok = scan_quoted(tok, U'"', TokenKind::double_quoted);
        } else if (c == U'`') {
            ok = scan_quoted(tok, U'`', TokenKind::back_quoted);
        } else if (is_graphic_token_char(c)) {
            ok = scan_graphic(tok);
        } else {
            switch (c) {
                case U'!':
                case U';':
                    advance();
                    tok.kind = TokenKind::name;
                    ok = true;
                    break;
                case U',':
                    advance();
                    tok.kind = TokenKind::comma;
                    ok = true;
                    break;
                case U'|':
                    advance();
                    tok.kind = TokenKind::bar;
                    ok = true;
                    break;
                case U'(':
                    advance();
                    tok.kind = open_is_ct(tok) ? TokenKind::open_ct : TokenKind::open_paren;
                    ok = true;
                    break;
                case U')':
                    advance();
                    tok.kind = TokenKind::close_paren;
                    ok = true;
                    break;
                case U'[':
                    advance();
                    tok.kind = TokenKind::open_list;
                    ok = true;
                    break;
                case U']':
                    advance();
                    tok.kind = TokenKind::close_list;
                    ok = true;
                    break;
                case U'{':
                    advance();
                    tok.kind = curly_is_dict_open(tok) ? TokenKind::dict_open : TokenKind::open_curly;
                    ok = true;
                    break;
                case U'}':
                    advance();
                    tok.kind = TokenKind::close_curly;
                    ok = true;
                    break;
                default:
                    return fail("character outside the accepted character set", start);
            }
        }
        if (!ok) return false;
        tok.text = std::string(text_from(start));
        tok.span = span_from(start);
        return true;
    }

    bool open_is_ct(const Token& tok) const {
        if (!tok.layout_before.empty() || tokens_.empty()) return false;
        switch (tokens_.back().kind) {
            case TokenKind::name:
            case TokenKind::close_curly:
            case TokenKind::close_list:
                return true;
            default:
                return false;
        }
    }

    bool curly_is_dict_open(const Token& tok) const {
        if (!dialect_.dicts || !tok.layout_before.empty() || tokens_.empty()) return false;
        TokenKind prev = tokens_.back().kind;
        return prev == TokenKind::name || prev == TokenKind::variable;
    }

    bool scan_letter_digit_name(Token& tok) {
        while (!at_end() && utf8::is_alphanumeric(peek())) advance();
        tok.kind = TokenKind::name;
        return true;
    }

    bool scan_variable(Token& tok) {
        advance();
        while (!at_end() && utf8::is_alphanumeric(peek())) advance();
        tok.kind = TokenKind::variable;
        return true;
    }

    bool scan_graphic(Token& tok) {
        // A lone '.' is the end token when followed by layout, a line
        // comment, or end of input.
        if (peek() == U'.') {
            char nb = peek_byte(1);
            if (nb == '\0' || is_layout_char(static_cast<char32_t>(static_cast<unsigned char>(nb))) ||
                nb == '%') {
                advance();
                tok.kind = TokenKind::end;
                return true;
            }
        }
        while (!at_end() && is_graphic_token_char(peek())) advance();
        tok.kind = TokenKind::name;
        return true;
    }

    // --- numbers --------------------------------------------------------

    bool digits_run(bool (*pred)(char32_t)) {
        // at least one digit; underscores allowed between digits under the
        // digit_groups dialect
        if (at_end() || !pred(peek())) return false;
        advance();
        while (!at_end()) {
            char32_t c = peek();
            if (pred(c)) {
                advance();
            } else if (c == U'_' && dialect_.digit_groups && pred(peek(1))) {
                advance();
                advance();
            } else {
                break;
            }
        }
        return true;
    }

    bool scan_number(Token& tok) {
        Cursor start = cur_;
        if (peek() == U'0') {
            char nb = peek_byte(1);
            if (nb == '\'') return scan_char_code_constant(tok);
            if (nb == 'x' || nb == 'o' || nb == 'b') {
                Cursor mark = cur_;
                advance();  // 0
                advance();  // radix letter
                bool ok = nb == 'x'   ? digits_run(is_hex_digit)
                          : nb == 'o' ? digits_run(is_octal_digit)
                                      : digits_run([](char32_t c) { return c == U'0' || c == U'1'; });
                if (!ok) {
                    cur_ = mark;  // plain zero, radix letter starts a name
                    advance();
                    tok.kind = TokenKind::integer;
                    return true;
                }
                tok.kind = TokenKind::integer;
                return true;
            }
        }
        digits_run(utf8::is_decimal_digit);
        bool is_float = false;
        if (peek() == U'.' && utf8::is_decimal_digit(peek(1))) {
            advance();
            digits_run(utf8::is_decimal_digit);
            is_float = true;
        }
        // exponent part; integer mantissa allowed only by dialect
        if ((peek() == U'e' || peek() == U'E') &&
            (is_float || dialect_.allow_integer_exponential_notation)) {
            Cursor mark = cur_;
            advance();
            if (peek() == U'+' || peek() == U'-') advance();
            if (!at_end() && utf8::is_decimal_digit(peek())) {
                digits_run(utf8::is_decimal_digit);
                is_float = true;
            } else {
                cur_ = mark;  // bare 'e' belongs to a following name token
            }
        }
        (void)start;
        tok.kind = is_float ? TokenKind::floating : TokenKind::integer;
        return true;
    }

    bool scan_char_code_constant(Token& tok) {
        Cursor mark = cur_;
        advance();  // 0
        advance();  // '
        if (at_end()) {
            cur_ = mark;
            advance();
            tok.kind = TokenKind::integer;
            return true;
        }
        char32_t c = peek();
        if (c == utf8::kInvalid) return fail("invalid UTF-8 sequence", mark);
        if (c == U'\'') {
            if (peek_byte(1) == '\'') {  // 0''' : doubled quote
                advance();
                advance();
                tok.kind = TokenKind::char_code_constant;
                return true;
            }
            if (dialect_.single_quote_char_constant) {  // 0''
                advance();
                tok.kind = TokenKind::char_code_constant;
                return true;
            }
            cur_ = mark;  // just the integer 0; quotes lex separately
            advance();
            tok.kind = TokenKind::integer;
            return true;
        }
        if (c == U'\\') {
            if (!scan_escape(mark, /*in_quoted=*/false)) return false;
            tok.kind = TokenKind::char_code_constant;
            return true;
        }
        if (c == U'\n' || c == U'\r') {
            cur_ = mark;
            advance();
            tok.kind = TokenKind::integer;
            return true;
        }
        if (c == U'\t' && !dialect_.tab_in_quotes) {
            cur_ = mark;
            advance();
            tok.kind = TokenKind::integer;
            return true;
        }
        advance();
        tok.kind = TokenKind::char_code_constant;
        return true;
    }

    // --- quoted tokens and escapes ---------------------------------------

    bool scan_escape(const Cursor& token_start, bool in_quoted) {
        (void)token_start;
        Cursor esc_start = cur_;
        advance();  // backslash
        if (at_end()) return fail("unterminated escape sequence", esc_start);
        char32_t c = peek();
        switch (c) {
            case U'a': case U'b': case U'f': case U'n': case U'r': case U't':
            case U'v': case U'\\': case U'\'': case U'"': case U'`':
                advance();
                return true;
            case U'\n':
                if (!in_quoted) return fail("invalid escape sequence", esc_start);
                advance();  // line continuation
                return true;
            case U'\r':
                if (!in_quoted) return fail("invalid escape sequence", esc_start);
                advance();
                if (!at_end() && peek() == U'\n') advance();
                return true;
            case U'x': {
                advance();
                if (!digits_ok(is_hex_digit)) return fail("invalid escape sequence", esc_start);
                return close_numeric_escape(esc_start);
            }
            case U'u':
            case U'U': {
                if (!dialect_.unicode_character_escape)
                    return fail("invalid escape sequence", esc_start);
                int need = c == U'u' ? 4 : 8;
                advance();
                for (int i = 0; i < need; ++i) {
                    if (at_end() || !is_hex_digit(peek()))
                        return fail("invalid escape sequence", esc_start);
                    advance();
                }
                return true;
            }
            default:
                if (is_octal_digit(c)) {
                    if (!digits_ok(is_octal_digit)) return fail("invalid escape sequence", esc_start);
                    return close_numeric_escape(esc_start);
                }
                return fail("invalid escape sequence", esc_start);
        }
    }

    bool digits_ok(bool (*pred)(char32_t)) {
        if (at_end() || !pred(peek())) return false;
        while (!at_end() && pred(peek())) advance();
        return true;
    }

    bool close_numeric_escape(const Cursor& esc_start) {
        if (!at_end() && peek() == U'\\') {
            advance();
            return true;
        }
        if (dialect_.missing_closing_backslash) return true;
        return fail("numeric escape lacks closing backslash", esc_start);
    }

    bool scan_quoted(Token& tok, char32_t quote, TokenKind kind) {
        Cursor start = cur_;
        advance();  // opening quote
        while (true) {
            if (at_end()) return fail("unterminated quoted token", start);
            char32_t c = peek();
            if (c == utf8::kInvalid) return fail("invalid UTF-8 sequence", start);
            if (c == quote) {
                advance();
                if (!at_end() && peek() == quote) {
                    advance();  // doubled quote stands for one quote char
                    continue;
                }
                tok.kind = kind;
                return true;
            }
            if (c == U'\\') {
                if (!scan_escape(start, /*in_quoted=*/true)) return false;
                continue;
            }
            if (c == U'\n' || c == U'\r') return fail("unterminated quoted token", start);
            if (c == U'\t' && !dialect_.tab_in_quotes)
                return fail("literal tab inside quoted token", start);
            advance();
        }
    }
};

}  // namespace

LexResult tokenize(std::string_view source, const DialectOptions& dialect) {
    return Lexer(source, dialect).run();
}

std::string reconstruct(const LexResult& lexed) {
    std::string out;
    for (const Token& tok : lexed.tokens) {
        for (const LayoutItem& item : tok.layout_before) out += item.text;
        out += tok.text;
    }
    for (const LayoutItem& item : lexed.trailing) out += item.text;
    return out;
}

VariableClass classify_variable(const Token& tok) {
    if (tok.kind != TokenKind::variable)
        throw std::invalid_argument("classify_variable: token is not a variable");
    return tok.text == "_" ? VariableClass::anonymous : VariableClass::named;
}

std::vector<IndentRun> layout_of_line(const LexResult& lexed, int line) {
    std::vector<IndentRun> runs;
    int col = 1;
    auto take = [&](const LayoutItem& item) {
        if (item.span.line_start != line || item.span.col_start != col) return false;
        if (item.kind != LayoutKind::space && item.kind != LayoutKind::tab) return false;
        // count characters, not bytes (space runs are ASCII anyway)
        int n = static_cast<int>(item.text.size());
        runs.push_back({item.kind, n});
        col += n;
        return true;
    };
    auto stop_at = [&](const SourceSpan& span) {
        return span.line_start == line || span.line_end > line ||
               (span.line_end == line && span.col_end > 1);
    };
    for (const Token& tok : lexed.tokens) {
        for (const LayoutItem& item : tok.layout_before) {
            if (take(item)) continue;
            if (stop_at(item.span)) return runs;
        }
        if (stop_at(tok.span)) return runs;
    }
    for (const LayoutItem& item : lexed.trailing) {
        if (take(item)) continue;
        if (stop_at(item.span)) return runs;
    }
    return runs;
}

bool is_plain_name_token(std::string_view text) {
    if (text.empty()) return false;
    if (text == "!" || text == ";" || text == "[]" || text == "{}") return true;
    auto first = utf8::decode(text, 0);
    if (utf8::is_small_letter(first.cp)) {
        std::size_t i = 0;
        while (i < text.size()) {
            auto d = utf8::decode(text, i);
            if (d.cp == utf8::kInvalid || !utf8::is_alphanumeric(d.cp)) return false;
            i += static_cast<std::size_t>(d.len);
        }
        return true;
    }
    if (is_graphic_token_char(first.cp)) {
        for (char ch : text)
            if (!is_graphic_token_char(static_cast<char32_t>(static_cast<unsigned char>(ch))))
                return false;
        // a lone '.' would lex as an end token in most positions
        if (text == ".") return false;
        return true;
    }
    return false;
}

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string name_token_value(const Token& tok, const DialectOptions& dialect) {
    if (!tok.text.empty() && tok.text.front() == '\'') {
        if (auto decoded = unquote_token_text(tok.text, dialect)) return *decoded;
    }
    return tok.text;
}

long long integer_token_value(const Token& tok, const DialectOptions& dialect) {
    const std::string& t = tok.text;
    if (tok.kind == TokenKind::char_code_constant) {
        // 0'c forms: doubled quote, escape, or a single character
        std::string_view rest = std::string_view(t).substr(2);
        if (rest == "''") return '\'';
        if (rest.size() == 1 && rest[0] == '\'') return '\'';
        std::string quoted = "'";
        quoted += rest;
        quoted += "'";
        if (auto decoded = unquote_token_text(quoted, dialect); decoded && !decoded->empty())
            return static_cast<long long>(utf8::decode(*decoded, 0).cp);
        return 0;
    }
    int base = 10;
    std::size_t i = 0;
    if (t.size() > 2 && t[0] == '0') {
        if (t[1] == 'x') { base = 16; i = 2; }
        else if (t[1] == 'o') { base = 8; i = 2; }
        else if (t[1] == 'b') { base = 2; i = 2; }
    }
    long long value = 0;
    for (; i < t.size(); ++i) {
        char c = t[i];
        if (c == '_') continue;
        int digit = hex_value(c);
        if (digit < 0 || digit >= base) break;
        value = value * base + digit;
    }
    return value;
}

std::optional<std::string> unquote_token_text(std::string_view text, const DialectOptions& dialect) {
    if (text.size() < 2) return std::nullopt;
    char quote = text.front();
    std::string out;
    std::size_t i = 1;
    std::size_t last = text.size() - 1;
    while (i < last) {
        char c = text[i];
        if (c == quote && i + 1 < last && text[i + 1] == quote) {
            out.push_back(quote);
            i += 2;
            continue;
        }
        if (c != '\\') {
            out.push_back(c);
            ++i;
            continue;
        }
        ++i;
        if (i >= last) return std::nullopt;
        char e = text[i];
        switch (e) {
            case 'a': out.push_back('\a'); ++i; break;
            case 'b': out.push_back('\b'); ++i; break;
            case 'f': out.push_back('\f'); ++i; break;
            case 'n': out.push_back('\n'); ++i; break;
            case 'r': out.push_back('\r'); ++i; break;
            case 't': out.push_back('\t'); ++i; break;
            case 'v': out.push_back('\v'); ++i; break;
            case '\\': out.push_back('\\'); ++i; break;
            case '\'': out.push_back('\''); ++i; break;
            case '"': out.push_back('"'); ++i; break;
            case '`': out.push_back('`'); ++i; break;
            case '\n': ++i; break;  // continuation
            case '\r':
                ++i;
                if (i < last && text[i] == '\n') ++i;
                break;
            case 'x': {
                ++i;
                char32_t cp = 0;
                bool any = false;
                while (i < last && hex_value(text[i]) >= 0) {
                    cp = cp * 16 + static_cast<char32_t>(hex_value(text[i]));
                    ++i;
                    any = true;
                }
                if (!any) return std::nullopt;
                if (i < last && text[i] == '\\') ++i;
                else if (!dialect.missing_closing_backslash) return std::nullopt;
                utf8::encode(cp, out);
                break;
            }
            case 'u':
            case 'U': {
                if (!dialect.unicode_character_escape) return std::nullopt;
                int need = e == 'u' ? 4 : 8;
                ++i;
                char32_t cp = 0;
                for (int k = 0; k < need; ++k) {
                    if (i >= last || hex_value(text[i]) < 0) return std::nullopt;
                    cp = cp * 16 + static_cast<char32_t>(hex_value(text[i]));
                    ++i;
                }
                utf8::encode(cp, out);
                break;
            }
            default: {
                if (e < '0' || e > '7') return std::nullopt;
                char32_t cp = 0;
                while (i < last && text[i] >= '0' && text[i] <= '7') {
                    cp = cp * 8 + static_cast<char32_t>(text[i] - '0');
                    ++i;
                }
                if (i < last && text[i] == '\\') ++i;
                else if (!dialect.missing_closing_backslash) return std::nullopt;
                utf8::encode(cp, out);
                break;
            }
        }
    }
    return out;
}

}  // namespace prolint
