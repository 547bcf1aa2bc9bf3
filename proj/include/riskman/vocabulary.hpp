#pragma once

#include "riskman/term.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace riskman {

inline const std::string kDefaultNamespace = "https://w3id.org/riskman/ontology#";

// Prefix -> namespace IRI map with longest-match shortening for reports.
class PrefixMap {
public:
    void set(const std::string& prefix, const std::string& iri_text) { map_[prefix] = iri_text; }
    std::optional<std::string> expand(const std::string& prefix) const {
        auto it = map_.find(prefix);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    bool has(const std::string& prefix) const { return map_.count(prefix) > 0; }

    // pfx:local or the raw IRI when no prefix matches.
    std::string shorten(const std::string& iri_text) const;

    const std::map<std::string, std::string>& entries() const { return map_; }

    // rdf:, rdfs:, xsd: plus the risk-management namespaces.
    static PrefixMap defaults(const std::string& vocab_ns = kDefaultNamespace,
                              const std::string& ps_ns = kDefaultNamespace);

private:
    std::map<std::string, std::string> map_;
};

// The fixed class and object-property catalogue of the risk-management
// schema: 24 concept names and 28 role names under a configurable namespace.
class Vocabulary {
public:
    explicit Vocabulary(std::string namespace_iri = kDefaultNamespace);

    const std::string& ns() const { return ns_; }
    std::string iri_for(std::string_view local) const { return ns_ + std::string(local); }
    Term concept_term(std::string_view local) const { return iri(iri_for(local)); }
    Term role_term(std::string_view local) const { return iri(iri_for(local)); }

    bool is_concept(const std::string& iri_text) const { return concepts_.count(iri_text) > 0; }
    bool is_role(const std::string& iri_text) const { return roles_.count(iri_text) > 0; }

    const std::set<std::string>& concept_names() const { return concepts_; }
    const std::set<std::string>& role_names() const { return roles_; }

    static const std::vector<std::string>& concept_locals();
    static const std::vector<std::string>& role_locals();

private:
    std::string ns_;
    std::set<std::string> concepts_;
    std::set<std::string> roles_;
};

// Generated helper roles (long role-chain decomposition) carry this marker;
// they are internal to saturation and excluded from serialized output.
bool is_aux_role(const std::string& iri_text);
std::string make_aux_role(const std::string& ns, std::size_t counter);

} // namespace riskman
