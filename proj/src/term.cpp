#include "riskman/term.hpp"

namespace riskman {

namespace {

bool looks_absolute(const std::string& iri_text) {
    // A scheme is [A-Za-z][A-Za-z0-9+.-]* followed by ':'.
    if (iri_text.empty()) return false;
    char c0 = iri_text[0];
    if (!((c0 >= 'a' && c0 <= 'z') || (c0 >= 'A' && c0 <= 'Z'))) return false;
    for (std::size_t i = 1; i < iri_text.size(); ++i) {
        char c = iri_text[i];
        if (c == ':') return true;
        bool scheme_char = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                           (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.';
        if (!scheme_char) return false;
    }
    return false;
}

} // namespace

Term make_term(TermKind kind, std::string value, std::string datatype, std::string language) {
    switch (kind) {
    case TermKind::Iri:
        if (value.empty()) throw ValueError("empty-value: IRI term requires a non-empty value");
        if (!looks_absolute(value))
            throw ValueError("malformed-iri: '" + value + "' is not an absolute IRI (no scheme)");
        break;
    case TermKind::Blank:
        if (value.empty()) throw ValueError("empty-value: blank node requires a non-empty label");
        break;
    case TermKind::Literal:
        break;
    }
    Term t;
    t.kind = kind;
    t.value = std::move(value);
    if (kind == TermKind::Literal) {
        t.datatype = std::move(datatype);
        t.language = std::move(language);
    }
    return t;
}

std::string local_name(std::string_view iri_text) {
    auto pos = iri_text.find_last_of("#/");
    if (pos == std::string_view::npos || pos + 1 >= iri_text.size())
        return std::string(iri_text);
    return std::string(iri_text.substr(pos + 1));
}

std::string local_name(const Term& term) {
    if (term.kind == TermKind::Blank) return "_:" + term.value;
    if (term.kind == TermKind::Literal) return "\"" + term.value + "\"";
    return local_name(std::string_view(term.value));
}

Assertion concept_assertion(Term subject, Term concept_name) {
    Assertion a;
    a.kind = AssertionKind::Concept;
    a.subject = std::move(subject);
    a.concept_name = std::move(concept_name);
    return a;
}

Assertion role_assertion(Term subject, Term role, Term object) {
    Assertion a;
    a.kind = AssertionKind::Role;
    a.subject = std::move(subject);
    a.role = std::move(role);
    a.object = std::move(object);
    return a;
}

} // namespace riskman
