#pragma once

#include "riskman/errors.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace riskman {

enum class TermKind { Iri, Blank, Literal };

// One RDF term. IRIs and blank nodes act as individuals; literals never
// participate in reasoning assertions and are kept on the side.
struct Term {
    TermKind kind = TermKind::Iri;
    std::string value;
    std::string datatype; // literals only, empty = plain
    std::string language; // literals only

    friend auto operator<=>(const Term&, const Term&) = default;
    friend bool operator==(const Term&, const Term&) = default;

    bool is_individual() const { return kind == TermKind::Iri || kind == TermKind::Blank; }
    bool is_literal() const { return kind == TermKind::Literal; }
};

// Validating constructor. IRIs must be absolute (scheme followed by ':'),
// blank labels non-empty.
Term make_term(TermKind kind, std::string value, std::string datatype = {},
               std::string language = {});

inline Term iri(std::string value) { return make_term(TermKind::Iri, std::move(value)); }
inline Term blank(std::string label) { return make_term(TermKind::Blank, std::move(label)); }
inline Term literal(std::string value, std::string datatype = {}, std::string language = {}) {
    return make_term(TermKind::Literal, std::move(value), std::move(datatype), std::move(language));
}

// Local part of an IRI: everything after the last '#' or '/'. Used for
// human-readable report lines.
std::string local_name(const Term& term);
std::string local_name(std::string_view iri_text);

struct TermHash {
    std::size_t operator()(const Term& t) const {
        std::size_t h = std::hash<std::string>{}(t.value);
        h ^= std::hash<int>{}(static_cast<int>(t.kind)) + 0x9e3779b9 + (h << 6) + (h >> 2);
        if (!t.datatype.empty())
            h ^= std::hash<std::string>{}(t.datatype) + 0x9e3779b9 + (h << 6) + (h >> 2);
        if (!t.language.empty())
            h ^= std::hash<std::string>{}(t.language) + 0x9e3779b9 + (h << 6) + (h >> 2);
        return h;
    }
};

enum class AssertionKind { Concept, Role };

// ABox assertion: either A(subject) or R(subject, object).
struct Assertion {
    AssertionKind kind = AssertionKind::Concept;
    Term subject;
    Term concept_name; // Concept kind
    Term role;         // Role kind
    Term object;       // Role kind

    friend auto operator<=>(const Assertion&, const Assertion&) = default;
    friend bool operator==(const Assertion&, const Assertion&) = default;
};

Assertion concept_assertion(Term subject, Term concept_name);
Assertion role_assertion(Term subject, Term role, Term object);

// Well-known IRIs.
namespace rdf {
inline const std::string type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline const std::string ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
} // namespace rdf
namespace rdfs {
inline const std::string label = "http://www.w3.org/2000/01/rdf-schema#label";
inline const std::string ns = "http://www.w3.org/2000/01/rdf-schema#";
} // namespace rdfs
namespace xsd {
inline const std::string string_type = "http://www.w3.org/2001/XMLSchema#string";
inline const std::string ns = "http://www.w3.org/2001/XMLSchema#";
} // namespace xsd

} // namespace riskman
