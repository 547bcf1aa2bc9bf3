#include "riskman/parsers.hpp"
#include "text_cursor.hpp"

#include <cctype>

namespace riskman {

using detail::Cursor;

namespace {

struct TurtleParser {
    Cursor cur;
    TripleDoc doc;

    explicit TurtleParser(std::string_view text, const PrefixMap& seed) : cur(text) {
        doc.prefix_map = seed;
    }

    // Only consumes '.' inside a name when another name character follows,
    // so statement-terminating dots stay in the stream.
    std::string lex_local() {
        std::string out;
        while (true) {
            char c = cur.peek();
            if (c == '.' && detail::is_name_char(cur.peek_at(1)) && cur.peek_at(1) != '.') {
                out += cur.advance();
                continue;
            }
            if (c != '.' && detail::is_name_char(c)) {
                out += cur.advance();
                continue;
            }
            break;
        }
        return out;
    }

    Term resolve_iri_ref(std::string raw) {
        if (raw.find(':') == std::string::npos && doc.base)
            raw = *doc.base + raw;
        try {
            return iri(std::move(raw));
        } catch (const ValueError& e) {
            cur.fail(e.what());
        }
    }

    Term resolve_prefixed(const std::string& prefix, const std::string& local) {
        auto ns = doc.prefix_map.expand(prefix);
        if (!ns)
            throw UnknownNameError("unknown-prefix: '" + prefix + ":' is not declared (line " +
                                   std::to_string(cur.line()) + ")");
        return iri(*ns + local);
    }

    bool at_word(std::string_view word) {
        for (std::size_t i = 0; i < word.size(); ++i)
            if (std::tolower(static_cast<unsigned char>(cur.peek_at(i))) != word[i]) return false;
        return !detail::is_name_char(cur.peek_at(word.size()));
    }

    // Bare "prefix"/"base" count as directives only when followed by
    // whitespace, so a declared prefix literally named "prefix" still works.
    bool at_directive(std::string_view word) {
        if (!at_word(word)) return false;
        char next = cur.peek_at(word.size());
        return next == ' ' || next == '\t' || next == '\r' || next == '\n';
    }

    void expect_word(std::string_view word) {
        for (std::size_t i = 0; i < word.size(); ++i) cur.advance();
    }

    // IRI ref, prefixed name, 'a' (predicates only), or blank node.
    Term parse_resource(bool allow_a) {
        char c = cur.peek();
        if (c == '<') {
            cur.advance();
            return resolve_iri_ref(detail::read_iri_body(cur));
        }
        if (c == '[') cur.fail_unsupported("anonymous property lists '[...]' are not supported");
        if (c == '(') cur.fail_unsupported("collections '(...)' are not supported");
        if (c == '_' && cur.peek_at(1) == ':') {
            cur.advance();
            cur.advance();
            std::string label = lex_local();
            if (label.empty()) cur.fail("empty blank node label");
            return blank(label);
        }
        if (allow_a && c == 'a' && !detail::is_name_char(cur.peek_at(1))) {
            cur.advance();
            return iri(rdf::type);
        }
        // prefixed name (prefix may be empty)
        std::string prefix;
        while (detail::is_name_char(cur.peek()) && cur.peek() != '.') prefix += cur.advance();
        if (!cur.consume(':'))
            cur.fail("expected IRI, prefixed name, or blank node");
        std::string local = lex_local();
        return resolve_prefixed(prefix, local);
    }

    Term parse_object() {
        char c = cur.peek();
        if (c == '"') {
            if (cur.peek_at(1) == '"' && cur.peek_at(2) == '"')
                cur.fail_unsupported("triple-quoted long literals are not supported");
            cur.advance();
            std::string body = detail::read_quoted_body(cur);
            if (cur.peek() == '^' && cur.peek_at(1) == '^') {
                cur.advance();
                cur.advance();
                Term dt = parse_resource(false);
                if (dt.kind != TermKind::Iri) cur.fail("datatype must be an IRI");
                return literal(body, dt.value);
            }
            if (cur.peek() == '@') {
                cur.advance();
                std::string tag;
                while (std::isalnum(static_cast<unsigned char>(cur.peek())) || cur.peek() == '-')
                    tag += cur.advance();
                if (tag.empty()) cur.fail("empty language tag");
                return literal(body, {}, tag);
            }
            return literal(body);
        }
        if (c == '\'')
            cur.fail_unsupported("single-quoted literals are not supported");
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-')
            cur.fail_unsupported("numeric literal shorthand is not supported; use \"n\"^^xsd:integer");
        if (at_word("true") || at_word("false"))
            cur.fail_unsupported("boolean literal shorthand is not supported");
        return parse_resource(false);
    }

    void parse_directive() {
        bool sparql_style = false;
        if (cur.peek() == '@') {
            cur.advance();
        } else {
            sparql_style = true;
        }
        if (at_word("prefix")) {
            expect_word("prefix");
            cur.skip_ws_and_comments();
            std::string prefix;
            while (detail::is_name_char(cur.peek()) && cur.peek() != '.') prefix += cur.advance();
            if (!cur.consume(':')) cur.fail("expected ':' in prefix declaration");
            cur.skip_ws_and_comments();
            if (!cur.consume('<')) cur.fail("expected <IRI> in prefix declaration");
            std::string ns = detail::read_iri_body(cur);
            doc.prefix_map.set(prefix, ns);
        } else if (at_word("base")) {
            expect_word("base");
            cur.skip_ws_and_comments();
            if (!cur.consume('<')) cur.fail("expected <IRI> in base declaration");
            doc.base = detail::read_iri_body(cur);
        } else {
            cur.fail("unknown directive");
        }
        cur.skip_ws_and_comments();
        if (!sparql_style) {
            if (!cur.consume('.')) cur.fail("expected '.' after @-directive");
        } else {
            cur.consume('.'); // tolerated either way
        }
    }

    void parse_statement() {
        Term subject = parse_resource(false);
        if (subject.kind == TermKind::Literal) cur.fail("literal cannot be a subject");
        while (true) {
            cur.skip_ws_and_comments();
            Term predicate = parse_resource(true);
            if (predicate.kind != TermKind::Iri) cur.fail("predicate must be an IRI");
            while (true) {
                cur.skip_ws_and_comments();
                Term object = parse_object();
                doc.triples.push_back({subject, predicate, object});
                cur.skip_ws_and_comments();
                if (cur.consume(',')) continue;
                break;
            }
            if (cur.consume(';')) {
                cur.skip_ws_and_comments();
                if (cur.peek() == '.') break; // trailing ';'
                continue;
            }
            break;
        }
        if (!cur.consume('.')) cur.fail("expected '.' terminating the statement");
    }

    TripleDoc run() {
        while (true) {
            cur.skip_ws_and_comments();
            if (cur.eof()) break;
            char c = cur.peek();
            if (c == '@' || at_directive("prefix") || at_directive("base")) {
                parse_directive();
            } else {
                parse_statement();
            }
        }
        return std::move(doc);
    }
};

} // namespace

TripleDoc parse_turtle_subset(std::string_view text, const PrefixMap& seed_prefixes) {
    return TurtleParser(text, seed_prefixes).run();
}

} // namespace riskman
