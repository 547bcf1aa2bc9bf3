#pragma once

#include "riskman/term.hpp"
#include "riskman/vocabulary.hpp"

#include <optional>
#include <string>
#include <vector>

namespace riskman {

struct Triple {
    Term subject;
    Term predicate;
    Term object;
    friend auto operator<=>(const Triple&, const Triple&) = default;
    friend bool operator==(const Triple&, const Triple&) = default;
};

// Parsed submission document: ordered triples plus the prefix context they
// were read under. Parsers are pure text -> value functions.
struct TripleDoc {
    std::vector<Triple> triples;
    PrefixMap prefix_map;
    std::optional<std::string> base;
    std::vector<std::string> warnings; // ignored markup, skipped attributes
};

// One N-Triples line per triple ("<s> <p> <o> ." with escaped literals).
std::string to_ntriples_line(const Triple& triple);
std::string serialize_ntriples(const std::vector<Triple>& triples);

// Escape/unescape for the double-quoted literal and <>-IRI productions.
std::string escape_ntriples_string(const std::string& raw);

} // namespace riskman
