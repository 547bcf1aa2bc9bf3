#include "riskman/parsers.hpp"
#include "text_cursor.hpp"
#include <cctype>

namespace riskman {

namespace detail {

void append_utf8(std::string& out, unsigned long cp) {
    if (cp <= 0x7F) {
        out += static_cast<char>(cp);
    } else if (cp <= 0x7FF) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp <= 0xFFFF) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

namespace {
unsigned long read_hex(Cursor& cur, int digits) {
    unsigned long value = 0;
    for (int i = 0; i < digits; ++i) {
        if (cur.eof()) cur.fail("truncated unicode escape");
        char c = cur.advance();
        value <<= 4;
        if (c >= '0' && c <= '9') value |= static_cast<unsigned long>(c - '0');
        else if (c >= 'a' && c <= 'f') value |= static_cast<unsigned long>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') value |= static_cast<unsigned long>(c - 'A' + 10);
        else cur.fail("invalid hex digit in unicode escape");
    }
    return value;
}
} // namespace

std::string read_quoted_body(Cursor& cur) {
    std::string out;
    while (true) {
        if (cur.eof()) cur.fail("unterminated string literal");
        char c = cur.advance();
        if (c == '"') return out;
        if (c == '\n') cur.fail("newline inside string literal");
        if (c != '\\') {
            out += c;
            continue;
        }
        if (cur.eof()) cur.fail("dangling escape at end of input");
        char e = cur.advance();
        switch (e) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        case 'u': append_utf8(out, read_hex(cur, 4)); break;
        case 'U': append_utf8(out, read_hex(cur, 8)); break;
        default: cur.fail(std::string("unknown escape '\\") + e + "'");
        }
    }
}

std::string read_iri_body(Cursor& cur) {
    std::string out;
    while (true) {
        if (cur.eof()) cur.fail("unterminated IRI");
        char c = cur.advance();
        if (c == '>') return out;
        if (c == ' ' || c == '\n' || c == '\t' || c == '<' || c == '"')
            cur.fail("illegal character inside IRI");
        if (c == '\\') {
            char e = cur.eof() ? '\0' : cur.advance();
            if (e == 'u') append_utf8(out, read_hex(cur, 4));
            else if (e == 'U') append_utf8(out, read_hex(cur, 8));
            else cur.fail("invalid escape inside IRI");
            continue;
        }
        out += c;
    }
}

bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '-' || c == '.' ||
           static_cast<unsigned char>(c) >= 0x80; // UTF-8 continuation/lead bytes
}

} // namespace detail

using detail::Cursor;

namespace {

Term parse_nt_subject(Cursor& cur) {
    if (cur.consume('<')) return iri(detail::read_iri_body(cur));
    if (cur.peek() == '_' && cur.peek_at(1) == ':') {
        cur.advance();
        cur.advance();
        std::string label;
        while (detail::is_name_char(cur.peek())) label += cur.advance();
        if (label.empty()) cur.fail("empty blank node label");
        return blank(label);
    }
    cur.fail("expected IRI or blank node");
}

Term parse_nt_object(Cursor& cur) {
    if (cur.peek() == '<' || (cur.peek() == '_' && cur.peek_at(1) == ':'))
        return parse_nt_subject(cur);
    if (cur.consume('"')) {
        std::string body = detail::read_quoted_body(cur);
        if (cur.peek() == '^' && cur.peek_at(1) == '^') {
            cur.advance();
            cur.advance();
            if (!cur.consume('<')) cur.fail("expected <datatype IRI> after ^^");
            return literal(body, detail::read_iri_body(cur));
        }
        if (cur.consume('@')) {
            std::string tag;
            while (detail::is_name_char(cur.peek())) tag += cur.advance();
            if (tag.empty()) cur.fail("empty language tag");
            return literal(body, {}, tag);
        }
        return literal(body);
    }
    cur.fail("expected IRI, blank node, or literal");
}

void skip_inline_ws(Cursor& cur) {
    while (cur.peek() == ' ' || cur.peek() == '\t') cur.advance();
}

} // namespace

TripleDoc parse_ntriples(std::string_view text, const PrefixMap& seed_prefixes) {
    TripleDoc doc;
    doc.prefix_map = seed_prefixes;
    Cursor cur(text);

    while (!cur.eof()) {
        skip_inline_ws(cur);
        if (cur.eof()) break;
        char c = cur.peek();
        if (c == '\n' || c == '\r') {
            cur.advance();
            continue;
        }
        if (c == '#') {
            while (!cur.eof() && cur.peek() != '\n') cur.advance();
            continue;
        }

        Term subject = parse_nt_subject(cur);
        skip_inline_ws(cur);
        if (!cur.consume('<')) cur.fail("expected predicate IRI");
        Term predicate = iri(detail::read_iri_body(cur));
        skip_inline_ws(cur);
        Term object = parse_nt_object(cur);
        skip_inline_ws(cur);
        if (!cur.consume('.')) cur.fail("expected '.' terminating the triple");
        skip_inline_ws(cur);
        if (!cur.eof() && cur.peek() != '\n' && cur.peek() != '\r' && cur.peek() != '#')
            cur.fail("trailing content after '.'");
        doc.triples.push_back({std::move(subject), std::move(predicate), std::move(object)});
    }
    return doc;
}

InputFormat detect_format(const std::string& path) {
    std::string lowered = path;
    for (char& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto ends_with = [&](std::string_view suffix) {
        return lowered.size() >= suffix.size() &&
               lowered.compare(lowered.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with(".nt")) return InputFormat::NTriples;
    if (ends_with(".ttl") || ends_with(".turtle")) return InputFormat::Turtle;
    if (ends_with(".html") || ends_with(".htm") || ends_with(".xhtml")) return InputFormat::RdfaHtml;
    throw ValueError("cannot detect input format from file name '" + path +
                     "' (expected .nt, .ttl, .html); use an explicit format flag");
}

TripleDoc parse_input(std::string_view text, InputFormat format, const std::string& base_iri,
                      const PrefixMap& seed_prefixes) {
    switch (format) {
    case InputFormat::NTriples: return parse_ntriples(text, seed_prefixes);
    case InputFormat::Turtle: return parse_turtle_subset(text, seed_prefixes);
    case InputFormat::RdfaHtml: return distill_rdfa_subset(text, base_iri, seed_prefixes);
    case InputFormat::Auto: break;
    }
    throw ValueError("parse_input requires a concrete format");
}

} // namespace riskman
