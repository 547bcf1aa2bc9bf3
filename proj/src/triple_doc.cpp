#include "riskman/triple_doc.hpp"

namespace riskman {

std::string escape_ntriples_string(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default: out += c; break;
        }
    }
    return out;
}

namespace {

std::string render_term(const Term& t) {
    switch (t.kind) {
    case TermKind::Iri: return "<" + t.value + ">";
    case TermKind::Blank: return "_:" + t.value;
    case TermKind::Literal: {
        std::string out = "\"" + escape_ntriples_string(t.value) + "\"";
        if (!t.language.empty()) out += "@" + t.language;
        else if (!t.datatype.empty() && t.datatype != xsd::string_type)
            out += "^^<" + t.datatype + ">";
        return out;
    }
    }
    return {};
}

} // namespace

std::string to_ntriples_line(const Triple& triple) {
    return render_term(triple.subject) + " " + render_term(triple.predicate) + " " +
           render_term(triple.object) + " .";
}

std::string serialize_ntriples(const std::vector<Triple>& triples) {
    std::string out;
    for (const auto& t : triples) {
        out += to_ntriples_line(t);
        out += '\n';
    }
    return out;
}

} // namespace riskman
