#pragma once

#include "riskman/graph.hpp"
#include "riskman/triple_doc.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace riskman {

// Line-oriented N-Triples: one triple per non-comment line, '#' comment
// lines and blank lines skipped. The first malformed line aborts the parse
// with its position.
TripleDoc parse_ntriples(std::string_view text, const PrefixMap& seed_prefixes = PrefixMap::defaults());

// Turtle subset: @prefix/PREFIX, <>-IRIs, prefixed names, 'a', ';' and ','
// lists, string literals with ^^datatype or @lang, _:label blank nodes.
// Collections "()" and property lists "[]" raise unsupported-construct.
TripleDoc parse_turtle_subset(std::string_view text, const PrefixMap& seed_prefixes = PrefixMap::defaults());

// RDFa-lite subset over lenient HTML: prefix= declares prefixes, about= and
// resource= set the current subject (nearest-ancestor rule), typeof= emits
// rdf:type triples, property= emits a triple whose object is resource=/href=
// on the same element, else the element's text content as a literal.
// Anything else is ignored and noted in the document warnings.
TripleDoc distill_rdfa_subset(std::string_view html_text, const std::string& base_iri,
                              const PrefixMap& seed_prefixes = PrefixMap::defaults());

// Mapping of parsed triples onto the ABox:
//   (s, rdf:type, C) with C a vocabulary concept -> concept assertion
//   (s, P, o)        with P a vocabulary role    -> role assertion
//   literal-object triples                        -> graph literal store
//   everything else                               -> leftover, untouched
// A concept name in predicate position or a role name used as a type is a
// hard type-misuse error.
struct AboxResult {
    Graph graph;
    std::vector<Triple> leftover;
};
AboxResult triples_to_abox(const TripleDoc& doc, const Vocabulary& vocab);

// Same mapping, into an existing graph (used when merging several inputs).
std::vector<Triple> map_triples_into(Graph& graph, const std::vector<Triple>& triples,
                                     const Vocabulary& vocab);

enum class InputFormat { Auto, NTriples, Turtle, RdfaHtml };

// .nt -> N-Triples, .ttl/.turtle -> Turtle, .html/.htm/.xhtml -> RDFa.
InputFormat detect_format(const std::string& path);

TripleDoc parse_input(std::string_view text, InputFormat format, const std::string& base_iri,
                      const PrefixMap& seed_prefixes);

// Closure/graph serialization: concept assertions as rdf:type lines, role
// assertions as predicate lines, literal triples verbatim; lines sorted.
// Roles carrying the reserved auxiliary-chain marker are omitted.
std::string graph_to_ntriples(const Graph& graph);

} // namespace riskman
