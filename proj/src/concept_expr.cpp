#include "riskman/axioms.hpp"

#include <algorithm>

namespace riskman {

ConceptExpr ConceptExpr::top() {
    ConceptExpr e;
    e.kind = Kind::Top;
    return e;
}

ConceptExpr ConceptExpr::bottom() {
    ConceptExpr e;
    e.kind = Kind::Bottom;
    return e;
}

ConceptExpr ConceptExpr::cls(std::string iri_text) {
    ConceptExpr e;
    e.kind = Kind::Name;
    e.name = std::move(iri_text);
    return e;
}

ConceptExpr ConceptExpr::nominal(Term individual) {
    if (!individual.is_individual())
        throw ValueError("nominal requires an individual term");
    ConceptExpr e;
    e.kind = Kind::Nominal;
    e.individual = std::move(individual);
    return e;
}

ConceptExpr ConceptExpr::conj(std::vector<ConceptExpr> conjuncts) {
    std::vector<ConceptExpr> flat;
    for (auto& c : conjuncts) {
        if (c.kind == Kind::And) {
            for (auto& inner : c.children) flat.push_back(std::move(inner));
        } else {
            flat.push_back(std::move(c));
        }
    }
    if (flat.empty()) throw ValueError("conjunction requires at least one conjunct");
    if (flat.size() == 1) return std::move(flat.front());
    ConceptExpr e;
    e.kind = Kind::And;
    e.children = std::move(flat);
    return e;
}

ConceptExpr ConceptExpr::exists(std::string role_iri, ConceptExpr filler) {
    ConceptExpr e;
    e.kind = Kind::Exists;
    e.role = std::move(role_iri);
    e.children.push_back(std::move(filler));
    return e;
}

Axiom Axiom::gci(ConceptExpr lhs, ConceptExpr rhs) {
    Axiom a;
    a.kind = Kind::Gci;
    a.lhs = std::move(lhs);
    a.rhs = std::move(rhs);
    return a;
}

Axiom Axiom::subclass(std::string sub_iri, std::string super_iri) {
    return gci(ConceptExpr::cls(std::move(sub_iri)), ConceptExpr::cls(std::move(super_iri)));
}

Axiom Axiom::role_inclusion(std::vector<std::string> chain, std::string super_role) {
    if (chain.empty()) throw ValueError("role inclusion chain must be non-empty");
    Axiom a;
    a.kind = Kind::RoleInclusion;
    a.chain = std::move(chain);
    a.super_role = std::move(super_role);
    return a;
}

Axiom Axiom::range(std::string role_iri, std::string concept_iri) {
    Axiom a;
    a.kind = Kind::Range;
    a.role = std::move(role_iri);
    a.range_concept = std::move(concept_iri);
    return a;
}

Axiom Axiom::transitive(std::string role_iri) {
    Axiom a;
    a.kind = Kind::Transitive;
    a.role = std::move(role_iri);
    return a;
}

Axiom Axiom::disjoint(std::string a_iri, std::string b_iri) {
    Axiom a;
    a.kind = Kind::Disjoint;
    if (b_iri < a_iri) std::swap(a_iri, b_iri);
    a.disjoint_pair = {std::move(a_iri), std::move(b_iri)};
    return a;
}

namespace {

bool legal_exists_filler(const ConceptExpr& filler) {
    return filler.kind == ConceptExpr::Kind::Top || filler.kind == ConceptExpr::Kind::Name ||
           filler.kind == ConceptExpr::Kind::Nominal;
}

std::optional<std::string> check_lhs_conjunct(const ConceptExpr& c, const PrefixMap& pm) {
    switch (c.kind) {
    case ConceptExpr::Kind::Top:
    case ConceptExpr::Kind::Name:
        return std::nullopt;
    case ConceptExpr::Kind::Nominal:
        return "bare nominal conjunct on a GCI left-hand side (use it as an existential filler)";
    case ConceptExpr::Kind::Bottom:
        return "bottom on a GCI left-hand side";
    case ConceptExpr::Kind::And:
        return "nested conjunction escaped flattening"; // unreachable via constructors
    case ConceptExpr::Kind::Exists:
        if (!legal_exists_filler(c.filler()))
            return "existential filler must be top, a concept name, or a nominal: " +
                   render_concept(c, pm);
        return std::nullopt;
    }
    return "unknown concept kind";
}

} // namespace

std::optional<std::string> check_fragment(const Axiom& axiom) {
    PrefixMap pm = PrefixMap::defaults();
    switch (axiom.kind) {
    case Axiom::Kind::RoleInclusion:
    case Axiom::Kind::Range:
    case Axiom::Kind::Transitive:
    case Axiom::Kind::Disjoint:
        return std::nullopt;
    case Axiom::Kind::Gci:
        break;
    }

    const ConceptExpr& lhs = axiom.lhs;
    if (lhs.kind == ConceptExpr::Kind::And) {
        for (const auto& c : lhs.children)
            if (auto reason = check_lhs_conjunct(c, pm)) return reason;
    } else if (auto reason = check_lhs_conjunct(lhs, pm)) {
        return reason;
    }

    const ConceptExpr& rhs = axiom.rhs;
    switch (rhs.kind) {
    case ConceptExpr::Kind::Name:
    case ConceptExpr::Kind::Bottom:
        return std::nullopt;
    case ConceptExpr::Kind::Exists:
        if (rhs.filler().kind != ConceptExpr::Kind::Nominal)
            return "right-hand existential must have a nominal filler (would require fresh "
                   "individuals): " +
                   render_concept(rhs, pm);
        return std::nullopt;
    default:
        return "GCI right-hand side must be a concept name, bottom, or an existential with a "
               "nominal filler: " +
               render_concept(rhs, pm);
    }
}

} // namespace riskman
