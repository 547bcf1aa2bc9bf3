#include "riskman/axioms.hpp"

#include <map>

namespace riskman {

namespace {

struct EdgeDecl {
    const char* role;
    const char* domain;
    const char* range;
};

// Every typed edge of the class schema; gt is deliberately untyped.
constexpr EdgeDecl kSchemaEdges[] = {
    {"hasParentHazard", "Hazard", "Hazard"},
    {"isPartOfDeviceComponent", "DeviceComponent", "DeviceComponent"},
    {"hasHazard", "DomainSpecificHazard", "Hazard"},
    {"hasDeviceFunction", "DomainSpecificHazard", "DeviceFunction"},
    {"hasDeviceProblem", "DomainSpecificHazard", "DeviceProblem"},
    {"hasDeviceComponent", "DomainSpecificHazard", "DeviceComponent"},
    {"causesHarm", "DomainSpecificHazard", "Harm"},
    {"hasHarm", "Risk", "Harm"},
    {"hasDomainSpecificHazard", "AnalyzedRisk", "DomainSpecificHazard"},
    {"hasAnalyzedRisk", "ControlledRisk", "AnalyzedRisk"},
    {"hasPrecedingEvent", "Event", "Event"},
    {"hasParentSituation", "HazardousSituation", "HazardousSituation"},
    {"hasEvent", "HazardousSituation", "Event"},
    {"hasProbability", "RiskLevel", "Probability"},
    {"hasProbability1", "RiskLevel", "Probability"},
    {"hasProbability2", "RiskLevel", "Probability"},
    {"hasSeverity", "RiskLevel", "Severity"},
    {"hasDeviceContext", "AnalyzedRisk", "DeviceContext"},
    {"hasHazardousSituation", "AnalyzedRisk", "HazardousSituation"},
    {"hasPatientProblem", "AnalyzedRisk", "PatientProblem"},
    {"hasInitialRiskLevel", "AnalyzedRisk", "RiskLevel"},
    {"hasRiskLevel", "Risk", "RiskLevel"},
    {"hasResidualRiskLevel", "ControlledRisk", "RiskLevel"},
    {"hasSubSDA", "SafeDesignArgument", "SafeDesignArgument"},
    {"isMitigatedBy", "ControlledRisk", "SafeDesignArgument"},
    {"hasImplementationManifest", "SafeDesignArgument", "ImplementationManifest"},
    {"hasSafetyAssurance", "AssuranceSDA", "SafetyAssurance"},
};

constexpr std::pair<const char*, const char*> kSubclassPairs[] = {
    {"AnalyzedRisk", "Risk"},
    {"ControlledRisk", "Risk"},
    {"SDAI", "SafeDesignArgument"},
    {"RiskSDA", "SafeDesignArgument"},
    {"RiskSDAI", "RiskSDA"},
    {"RiskSDAI", "SDAI"},
    {"AssuranceSDA", "SafeDesignArgument"},
    {"AssuranceSDAI", "AssuranceSDA"},
    {"AssuranceSDAI", "SDAI"},
};

} // namespace

std::vector<std::pair<std::string, std::string>>
derive_disjointness(const std::vector<std::pair<std::string, std::string>>& hierarchy,
                    const std::set<std::string>& concept_names) {
    // Reflexive-transitive descendants per name, via fixpoint over the
    // declared pairs. Cycle detection: a name reachable from a strict
    // ancestor of itself.
    std::map<std::string, std::set<std::string>> ancestors; // name -> all supers (incl. self)
    for (const auto& name : concept_names) ancestors[name].insert(name);
    for (const auto& [sub, super] : hierarchy) {
        ancestors[sub].insert(sub);
        ancestors[super].insert(super);
        ancestors[sub].insert(super);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [name, supers] : ancestors) {
            std::set<std::string> grown = supers;
            for (const auto& s : supers) {
                const auto& up = ancestors[s];
                grown.insert(up.begin(), up.end());
            }
            if (grown.size() != supers.size()) {
                supers = std::move(grown);
                changed = true;
            }
        }
    }
    for (const auto& [sub, super] : hierarchy)
        if (sub != super && ancestors[super].count(sub))
            throw CyclicHierarchyError("cyclic-hierarchy: '" + sub + "' and '" + super +
                                       "' subsume each other");

    auto subsumes = [&](const std::string& a, const std::string& b) {
        return ancestors[b].count(a) > 0; // a is an ancestor of b
    };

    std::vector<std::pair<std::string, std::string>> out;
    std::vector<std::string> names(concept_names.begin(), concept_names.end());
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            const std::string& a = names[i];
            const std::string& b = names[j];
            if (subsumes(a, b) || subsumes(b, a)) continue;
            bool common_descendant = false;
            for (const auto& d : names) {
                if (subsumes(a, d) && subsumes(b, d)) {
                    common_descendant = true;
                    break;
                }
            }
            if (!common_descendant) out.emplace_back(a, b);
        }
    }
    return out;
}

Ontology builtin_riskman_ontology(const Vocabulary& vocab) {
    Ontology onto(vocab);
    auto C = [&](const char* local) { return ConceptExpr::cls(vocab.iri_for(local)); };
    auto some = [&](const char* role) {
        return ConceptExpr::exists(vocab.iri_for(role), ConceptExpr::top());
    };
    auto gci = [&](ConceptExpr lhs, ConceptExpr rhs) {
        onto.axioms.push_back(Axiom::gci(std::move(lhs), std::move(rhs)));
    };

    // Definitional GCIs.
    gci(ConceptExpr::conj({some("hasDeviceContext"), some("hasDomainSpecificHazard"),
                           some("hasHarm"), some("hasHazardousSituation"),
                           some("hasInitialRiskLevel")}),
        C("AnalyzedRisk"));
    gci(ConceptExpr::conj({C("SafeDesignArgument"), some("hasSafetyAssurance")}), C("AssuranceSDA"));
    gci(ConceptExpr::conj({C("SDAI"), C("AssuranceSDA")}), C("AssuranceSDAI"));
    gci(ConceptExpr::conj({some("hasAnalyzedRisk"), some("hasResidualRiskLevel"),
                           some("isMitigatedBy")}),
        C("ControlledRisk"));
    gci(ConceptExpr::conj({some("hasDeviceComponent"), some("hasDeviceFunction"),
                           some("hasHazard")}),
        C("DomainSpecificHazard"));
    gci(some("hasEvent"), C("HazardousSituation"));
    gci(ConceptExpr::conj({some("hasHarm"), some("hasRiskLevel")}), C("Risk"));
    gci(ConceptExpr::conj({some("hasProbability"), some("hasSeverity")}), C("RiskLevel"));
    gci(C("RiskSDA"), C("SafeDesignArgument"));
    gci(ConceptExpr::conj({C("RiskSDA"), C("SDAI")}), C("RiskSDAI"));
    gci(ConceptExpr::conj({C("SafeDesignArgument"), some("hasImplementationManifest")}), C("SDAI"));

    // Role inclusions.
    onto.axioms.push_back(Axiom::role_inclusion(
        {vocab.iri_for("hasAnalyzedRisk"), vocab.iri_for("hasHarm")}, vocab.iri_for("hasHarm")));
    onto.axioms.push_back(
        Axiom::role_inclusion({vocab.iri_for("hasInitialRiskLevel")}, vocab.iri_for("hasRiskLevel")));
    onto.axioms.push_back(Axiom::role_inclusion({vocab.iri_for("hasResidualRiskLevel")},
                                                vocab.iri_for("hasRiskLevel")));

    // Hierarchy and temporal-order roles are transitive.
    for (const char* role : {"hasParentHazard", "hasParentSituation", "isPartOfDeviceComponent",
                             "hasPrecedingEvent"})
        onto.axioms.push_back(Axiom::transitive(vocab.iri_for(role)));

    // Declared subclass pairs, kept both as GCIs and as the hierarchy used
    // for disjointness derivation.
    for (const auto& [sub, super] : kSubclassPairs) {
        onto.axioms.push_back(Axiom::subclass(vocab.iri_for(sub), vocab.iri_for(super)));
        onto.hierarchy.emplace_back(vocab.iri_for(sub), vocab.iri_for(super));
    }

    // Domain (∃R.⊤ ⊑ A) and range axioms for every typed schema edge.
    for (const auto& e : kSchemaEdges) {
        gci(some(e.role), C(e.domain));
        onto.axioms.push_back(Axiom::range(vocab.iri_for(e.role), vocab.iri_for(e.range)));
    }

    for (auto& [a, b] : derive_disjointness(onto.hierarchy, vocab.concept_names()))
        onto.axioms.push_back(Axiom::disjoint(a, b));

    return onto;
}

} // namespace riskman
