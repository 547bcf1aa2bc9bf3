#include "riskman/parsers.hpp"
#include "text_cursor.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace riskman {

namespace {

bool is_void_element(const std::string& tag) {
    static const char* kVoid[] = {"area", "base",  "br",   "col",  "embed", "hr",    "img",
                                  "input", "link", "meta", "param", "source", "track", "wbr"};
    return std::find(std::begin(kVoid), std::end(kVoid), tag) != std::end(kVoid);
}

struct Attr {
    std::string name;
    std::string value;
};

struct Tag {
    std::string name;
    std::vector<Attr> attrs;
    bool closing = false;
    bool self_closing = false;

    std::optional<std::string> attr(const std::string& key) const {
        for (const auto& a : attrs)
            if (a.name == key) return a.value;
        return std::nullopt;
    }
};

// Text chunk and/or the tag that follows it; tag is empty at end of input.
struct HtmlEvent {
    std::string text;
    std::optional<Tag> tag;
};

std::string collapse_ws(const std::string& text) {
    std::string out;
    bool in_ws = true; // drops leading whitespace
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_ws = true;
        } else {
            if (in_ws && !out.empty()) out += ' ';
            in_ws = false;
            out += c;
        }
    }
    return out;
}

std::string decode_entities(const std::string& text) {
    std::string out;
    for (std::size_t i = 0; i < text.size();) {
        if (text[i] == '&') {
            auto semi = text.find(';', i);
            if (semi != std::string::npos && semi - i <= 8) {
                std::string ent = text.substr(i + 1, semi - i - 1);
                bool handled = true;
                if (ent == "amp") out += '&';
                else if (ent == "lt") out += '<';
                else if (ent == "gt") out += '>';
                else if (ent == "quot") out += '"';
                else if (ent == "apos") out += '\'';
                else if (ent.size() > 1 && ent[0] == '#') {
                    try {
                        bool hex = ent[1] == 'x' || ent[1] == 'X';
                        unsigned long cp = std::stoul(ent.substr(hex ? 2 : 1), nullptr, hex ? 16 : 10);
                        detail::append_utf8(out, cp);
                    } catch (...) {
                        handled = false;
                    }
                } else {
                    handled = false;
                }
                if (handled) {
                    i = semi + 1;
                    continue;
                }
            }
        }
        out += text[i++];
    }
    return out;
}

class HtmlScanner {
public:
    explicit HtmlScanner(std::string_view text) : cur_(text) {}

    HtmlEvent next() {
        HtmlEvent ev;
        while (!cur_.eof()) {
            if (cur_.peek() != '<') {
                ev.text += cur_.advance();
                continue;
            }
            if (starts_with("<!--")) {
                skip_until("-->");
                continue;
            }
            if (cur_.peek_at(1) == '!' || cur_.peek_at(1) == '?') {
                while (!cur_.eof() && cur_.advance() != '>') {}
                continue;
            }
            ev.tag = parse_tag();
            return ev;
        }
        return ev;
    }

    // script/style bodies are skipped verbatim up to the closing tag.
    void skip_raw_content(const std::string& tag_name) {
        std::string close = "</" + tag_name;
        while (!cur_.eof() && !starts_with_ci(close)) cur_.advance();
    }

    std::size_t line() const { return cur_.line(); }

private:
    bool starts_with(std::string_view s) const {
        for (std::size_t i = 0; i < s.size(); ++i)
            if (cur_.peek_at(i) != s[i]) return false;
        return true;
    }

    bool starts_with_ci(std::string_view s) const {
        for (std::size_t i = 0; i < s.size(); ++i)
            if (std::tolower(static_cast<unsigned char>(cur_.peek_at(i))) !=
                std::tolower(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    }

    void skip_until(std::string_view s) {
        while (!cur_.eof() && !starts_with(s)) cur_.advance();
        for (std::size_t i = 0; i < s.size() && !cur_.eof(); ++i) cur_.advance();
    }

    Tag parse_tag() {
        Tag tag;
        cur_.advance(); // '<'
        if (cur_.peek() == '/') {
            tag.closing = true;
            cur_.advance();
        }
        while (std::isalnum(static_cast<unsigned char>(cur_.peek())) || cur_.peek() == '-')
            tag.name += static_cast<char>(std::tolower(static_cast<unsigned char>(cur_.advance())));
        if (tag.name.empty()) cur_.fail("malformed tag");
        while (true) {
            while (std::isspace(static_cast<unsigned char>(cur_.peek()))) cur_.advance();
            if (cur_.eof()) cur_.fail("unterminated tag");
            if (cur_.peek() == '>') {
                cur_.advance();
                break;
            }
            if (cur_.peek() == '/' && cur_.peek_at(1) == '>') {
                cur_.advance();
                cur_.advance();
                tag.self_closing = true;
                break;
            }
            Attr attr;
            while (detail::is_name_char(cur_.peek()) || cur_.peek() == ':')
                attr.name += static_cast<char>(std::tolower(static_cast<unsigned char>(cur_.advance())));
            if (attr.name.empty()) cur_.fail("malformed attribute");
            while (std::isspace(static_cast<unsigned char>(cur_.peek()))) cur_.advance();
            if (cur_.consume('=')) {
                while (std::isspace(static_cast<unsigned char>(cur_.peek()))) cur_.advance();
                char quote = cur_.peek();
                if (quote == '"' || quote == '\'') {
                    cur_.advance();
                    while (!cur_.eof() && cur_.peek() != quote) attr.value += cur_.advance();
                    if (!cur_.consume(quote)) cur_.fail("unterminated attribute value");
                } else {
                    while (!cur_.eof() && !std::isspace(static_cast<unsigned char>(cur_.peek())) &&
                           cur_.peek() != '>')
                        attr.value += cur_.advance();
                }
                attr.value = decode_entities(attr.value);
            }
            tag.attrs.push_back(std::move(attr));
        }
        return tag;
    }

    detail::Cursor cur_;
};

struct LiteralCollector {
    Term subject;
    Term predicate;
    std::string text;
    bool open = true;
};

struct Frame {
    std::string tag;
    std::optional<Term> subject;
    PrefixMap prefixes;
    std::vector<std::size_t> collectors; // opened by this element
};

} // namespace

TripleDoc distill_rdfa_subset(std::string_view html_text, const std::string& base_iri,
                              const PrefixMap& seed_prefixes) {
    TripleDoc doc;
    doc.prefix_map = seed_prefixes;
    if (!base_iri.empty()) doc.base = base_iri;

    HtmlScanner scanner(html_text);
    std::vector<Frame> stack;
    stack.push_back({"", std::nullopt, seed_prefixes, {}});
    std::vector<LiteralCollector> collectors;

    auto resolve = [&](const std::string& raw, const PrefixMap& prefixes) -> Term {
        auto colon = raw.find(':');
        if (colon != std::string::npos) {
            std::string prefix = raw.substr(0, colon);
            if (auto ns = prefixes.expand(prefix)) return iri(*ns + raw.substr(colon + 1));
            // Only values that plainly look like full IRIs bypass prefix
            // declaration; a short undeclared prefix is an authoring error.
            bool full_iri = raw.compare(colon, 3, "://") == 0 || prefix == "urn" ||
                            prefix == "mailto" || prefix == "tag" || prefix == "file" ||
                            prefix == "doi";
            if (full_iri) return iri(raw);
            throw UnknownNameError("unknown-prefix: '" + prefix + ":' is not declared");
        }
        if (!base_iri.empty()) return iri(base_iri + raw);
        throw ValueError("malformed-iri: relative reference '" + raw + "' with no base IRI");
    };

    auto split_tokens = [](const std::string& value) {
        std::vector<std::string> out;
        std::string tok;
        for (char c : value) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                if (!tok.empty()) {
                    out.push_back(tok);
                    tok.clear();
                }
            } else {
                tok += c;
            }
        }
        if (!tok.empty()) out.push_back(tok);
        return out;
    };

    auto emit = [&](const Term& s, const Term& p, const Term& o) { doc.triples.push_back({s, p, o}); };

    auto flush_collectors = [&](const Frame& frame) {
        for (std::size_t ci : frame.collectors) {
            auto& c = collectors[ci];
            if (!c.open) continue;
            c.open = false;
            emit(c.subject, c.predicate, literal(collapse_ws(c.text)));
        }
    };

    while (true) {
        HtmlEvent ev = scanner.next();
        if (!ev.text.empty()) {
            std::string decoded = decode_entities(ev.text);
            for (auto& c : collectors)
                if (c.open) c.text += decoded;
        }
        if (!ev.tag) break;
        Tag& tag = *ev.tag;

        if (!tag.closing && (tag.name == "script" || tag.name == "style")) {
            scanner.skip_raw_content(tag.name);
            stack.push_back({tag.name, stack.back().subject, stack.back().prefixes, {}});
            continue;
        }

        if (tag.closing) {
            auto it = std::find_if(stack.rbegin(), stack.rend(),
                                   [&](const Frame& f) { return f.tag == tag.name; });
            if (it == stack.rend() || it == stack.rend() - 1) {
                doc.warnings.push_back("ignored unmatched </" + tag.name + ">");
                continue;
            }
            std::size_t keep = stack.size() - 1 - static_cast<std::size_t>(it - stack.rbegin());
            while (stack.size() > keep) {
                flush_collectors(stack.back());
                stack.pop_back();
            }
            continue;
        }

        Frame frame;
        frame.tag = tag.name;
        frame.subject = stack.back().subject;
        frame.prefixes = stack.back().prefixes;

        if (auto pv = tag.attr("prefix")) {
            auto tokens = split_tokens(*pv);
            for (std::size_t i = 0; i + 1 < tokens.size(); i += 2) {
                std::string pfx = tokens[i];
                if (!pfx.empty() && pfx.back() == ':') pfx.pop_back();
                frame.prefixes.set(pfx, tokens[i + 1]);
                doc.prefix_map.set(pfx, tokens[i + 1]);
            }
        }

        if (auto about = tag.attr("about")) frame.subject = resolve(*about, frame.prefixes);

        if (auto tf = tag.attr("typeof")) {
            if (!frame.subject) {
                doc.warnings.push_back("typeof without a subject in scope (line " +
                                       std::to_string(scanner.line()) + "); skipped");
            } else {
                for (const auto& t : split_tokens(*tf))
                    emit(*frame.subject, iri(rdf::type), resolve(t, frame.prefixes));
            }
        }

        auto resource = tag.attr("resource");
        auto href = tag.attr("href");

        if (auto prop = tag.attr("property")) {
            if (!frame.subject) {
                doc.warnings.push_back("property without a subject in scope (line " +
                                       std::to_string(scanner.line()) + "); skipped");
            } else {
                std::optional<std::string> object_ref = resource ? resource : href;
                for (const auto& p : split_tokens(*prop)) {
                    Term pred = resolve(p, frame.prefixes);
                    if (object_ref) {
                        emit(*frame.subject, pred, resolve(*object_ref, frame.prefixes));
                    } else if (tag.self_closing || is_void_element(tag.name)) {
                        emit(*frame.subject, pred, literal(""));
                    } else {
                        collectors.push_back({*frame.subject, pred, "", true});
                        frame.collectors.push_back(collectors.size() - 1);
                    }
                }
            }
        }

        // resource= re-points the subject for descendants, whether or not it
        // also served as a property object above.
        if (resource) frame.subject = resolve(*resource, frame.prefixes);

        for (const auto& a : tag.attrs) {
            if (a.name == "vocab" || a.name == "rel" || a.name == "rev" || a.name == "content" ||
                a.name == "datatype" || a.name == "inlist")
                doc.warnings.push_back("ignored RDFa attribute '" + a.name +
                                       "' (outside the supported subset)");
        }

        if (tag.self_closing || is_void_element(tag.name)) {
            flush_collectors(frame);
        } else {
            stack.push_back(std::move(frame));
        }
    }

    while (stack.size() > 1) {
        flush_collectors(stack.back());
        stack.pop_back();
    }

    return doc;
}

} // namespace riskman
