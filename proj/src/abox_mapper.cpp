#include "riskman/parsers.hpp"

#include <algorithm>

namespace riskman {

std::vector<Triple> map_triples_into(Graph& graph, const std::vector<Triple>& triples,
                                     const Vocabulary& vocab) {
    std::vector<Triple> leftover;
    for (const auto& t : triples) {
        if (t.predicate.kind != TermKind::Iri)
            throw ValueError("triple predicate must be an IRI");
        const std::string& p = t.predicate.value;

        if (vocab.is_concept(p))
            throw TypeMisuseError("type-misuse: concept name '" + p + "' used as a predicate");

        if (p == rdf::type && t.object.kind == TermKind::Iri) {
            if (vocab.is_role(t.object.value))
                throw TypeMisuseError("type-misuse: role name '" + t.object.value +
                                      "' used as a class");
            if (vocab.is_concept(t.object.value)) {
                graph.add_concept(t.subject, t.object);
                continue;
            }
            leftover.push_back(t);
            continue;
        }

        if (t.object.is_literal()) {
            graph.add_literal_triple(t.subject, t.predicate, t.object);
            continue;
        }

        if (vocab.is_role(p)) {
            graph.add_role(t.subject, t.predicate, t.object);
            continue;
        }

        leftover.push_back(t);
    }
    return leftover;
}

AboxResult triples_to_abox(const TripleDoc& doc, const Vocabulary& vocab) {
    AboxResult result;
    result.leftover = map_triples_into(result.graph, doc.triples, vocab);
    return result;
}

std::string graph_to_ntriples(const Graph& graph) {
    std::vector<std::string> lines;
    for (const auto& a : graph.assertions()) {
        if (a.kind == AssertionKind::Concept) {
            lines.push_back(to_ntriples_line({a.subject, iri(rdf::type), a.concept_name}));
        } else {
            if (is_aux_role(a.role.value)) continue;
            lines.push_back(to_ntriples_line({a.subject, a.role, a.object}));
        }
    }
    for (const auto& t : graph.literal_triples())
        lines.push_back(to_ntriples_line({t[0], t[1], t[2]}));
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

} // namespace riskman
