#include "riskman/vocabulary.hpp"

namespace riskman {

std::string PrefixMap::shorten(const std::string& iri_text) const {
    const std::string* best_ns = nullptr;
    const std::string* best_pfx = nullptr;
    for (const auto& [pfx, ns] : map_) {
        if (ns.empty() || iri_text.size() <= ns.size()) continue;
        if (iri_text.compare(0, ns.size(), ns) != 0) continue;
        if (!best_ns || ns.size() > best_ns->size()) {
            best_ns = &ns;
            best_pfx = &pfx;
        }
    }
    if (!best_ns) return iri_text;
    return *best_pfx + ":" + iri_text.substr(best_ns->size());
}

PrefixMap PrefixMap::defaults(const std::string& vocab_ns, const std::string& ps_ns) {
    PrefixMap pm;
    pm.set("rdf", rdf::ns);
    pm.set("rdfs", rdfs::ns);
    pm.set("xsd", xsd::ns);
    pm.set("rm", vocab_ns);
    // Magnitudes default into the vocabulary namespace; a separate ps:
    // prefix only exists when they have been remapped elsewhere.
    if (ps_ns != vocab_ns) pm.set("ps", ps_ns);
    return pm;
}

const std::vector<std::string>& Vocabulary::concept_locals() {
    static const std::vector<std::string> names = {
        "AnalyzedRisk",   "AssuranceSDA",           "AssuranceSDAI", "ControlledRisk",
        "DeviceComponent", "DeviceContext",          "DeviceFunction", "DeviceProblem",
        "DomainSpecificHazard", "Event",             "Harm",          "Hazard",
        "HazardousSituation", "ImplementationManifest", "PatientProblem", "Probability",
        "Risk",           "RiskLevel",              "RiskSDA",       "RiskSDAI",
        "SafeDesignArgument", "SafetyAssurance",    "SDAI",          "Severity",
    };
    return names;
}

const std::vector<std::string>& Vocabulary::role_locals() {
    static const std::vector<std::string> names = {
        "hasAnalyzedRisk",      "hasDeviceComponent", "hasDeviceContext",
        "hasDeviceFunction",    "hasDeviceProblem",   "hasDomainSpecificHazard",
        "hasEvent",             "hasHarm",            "hasHazard",
        "hasHazardousSituation", "hasImplementationManifest", "hasInitialRiskLevel",
        "hasParentHazard",      "hasParentSituation", "hasPatientProblem",
        "hasPrecedingEvent",    "hasProbability",     "hasProbability1",
        "hasProbability2",      "hasResidualRiskLevel", "hasRiskLevel",
        "hasSafetyAssurance",   "hasSeverity",        "hasSubSDA",
        "isMitigatedBy",        "isPartOfDeviceComponent", "causesHarm",
        "gt",
    };
    return names;
}

Vocabulary::Vocabulary(std::string namespace_iri) : ns_(std::move(namespace_iri)) {
    for (const auto& local : concept_locals()) concepts_.insert(ns_ + local);
    for (const auto& local : role_locals()) roles_.insert(ns_ + local);
}

namespace {
const std::string kAuxRoleMarker = "__chain_aux_";
}

bool is_aux_role(const std::string& iri_text) {
    return iri_text.find(kAuxRoleMarker) != std::string::npos;
}

std::string make_aux_role(const std::string& ns, std::size_t counter) {
    return ns + kAuxRoleMarker + std::to_string(counter);
}

} // namespace riskman
