#pragma once

#include "riskman/errors.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace riskman::detail {

// Character cursor with line/column tracking shared by the text parsers.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }
    char peek_at(std::size_t ahead) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    bool consume(char expected) {
        if (peek() != expected) return false;
        advance();
        return true;
    }

    void skip_ws_and_comments(bool hash_comments = true) {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (hash_comments && c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }
    std::size_t offset() const { return pos_; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, col_);
    }
    [[noreturn]] void fail_unsupported(const std::string& message) const {
        throw UnsupportedConstructError("unsupported-construct: " + message, line_, col_);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

// Decodes one code point to UTF-8 (for \u / \U escapes).
void append_utf8(std::string& out, unsigned long code_point);

// Reads the body of a double-quoted string starting after the opening quote;
// handles the escape set \" \\ \n \r \t \uXXXX \UXXXXXXXX.
std::string read_quoted_body(Cursor& cur);

// Reads <...> content (after '<'), no escapes beyond \u/\U.
std::string read_iri_body(Cursor& cur);

bool is_name_char(char c);

} // namespace riskman::detail
