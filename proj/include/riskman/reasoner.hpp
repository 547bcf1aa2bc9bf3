#pragma once

#include "riskman/axioms.hpp"
#include "riskman/graph.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace riskman {

// Compiled inference rule in normal form. Variables are small indices;
// variable 0 is the focus individual of GCI-derived rules.
struct RuleCondition {
    enum class Kind { ConceptMember, RoleEdge, RoleEdgeToConstant };
    Kind kind = Kind::ConceptMember;
    std::string concept_name; // ConceptMember
    std::string role;         // RoleEdge / RoleEdgeToConstant
    int subject_var = 0;
    int object_var = -1;  // RoleEdge
    Term constant;        // RoleEdgeToConstant
};

struct RuleHead {
    enum class Kind { AddConcept, AddRole, AddRoleToConstant, Clash };
    Kind kind = Kind::AddConcept;
    std::string concept_name; // AddConcept
    std::string role;         // AddRole / AddRoleToConstant
    int subject_var = 0;
    int object_var = -1;
    Term constant;                        // AddRoleToConstant
    std::string clash_a, clash_b;         // Clash: the disjoint pair
};

struct Rule {
    std::string id; // stable identifier for provenance
    std::vector<RuleCondition> body;
    RuleHead head;
    int var_count = 1;
};

// Normal-form compilation of the restricted axiom grammar. Chains longer
// than two are decomposed into binary joins over generated auxiliary roles
// (their IRIs carry a reserved marker and are hidden from serialization).
std::vector<Rule> compile_rules(const Ontology& ontology);
std::vector<Rule> compile_axioms(const std::vector<Axiom>& axioms, const std::string& aux_ns);


struct ClashRecord {
    Term individual;
    std::string concept_a;
    std::string concept_b;
    std::string rule_id;

    friend auto operator<=>(const ClashRecord&, const ClashRecord&) = default;
    friend bool operator==(const ClashRecord&, const ClashRecord&) = default;
};

struct SaturationStats {
    std::size_t input_assertions = 0;
    std::size_t derived_assertions = 0;
    std::size_t iterations = 0;
    long long elapsed_ms = 0;
};

struct ResourceLimits {
    std::size_t max_assertions = 10'000'000;
    double max_seconds = 300.0;
    static ResourceLimits unlimited() {
        return {std::numeric_limits<std::size_t>::max(),
                std::numeric_limits<double>::infinity()};
    }
};

struct Derivation {
    Graph::Encoded assertion;
    std::string rule_id;
};

struct MaterializeResult {
    Graph closure; // frozen
    SaturationStats stats;
    std::vector<ClashRecord> clashes;           // sorted, deduplicated
    std::vector<Derivation> derivations;        // derivation order, first rule wins
};

// Least fixpoint of the rules over the input, computed semi-naively: every
// iteration joins at least one assertion derived in the previous one.
// Clashes are collected and never abort saturation.
MaterializeResult materialize(const Graph& input, const std::vector<Rule>& rules,
                              const ResourceLimits& limits = {});

// Test oracle: exhaustively re-applies every rule to the whole graph until
// nothing changes. Shares only the Graph type with materialize().
Graph naive_materialize(const Graph& input, const std::vector<Rule>& rules,
                        const ResourceLimits& limits = {});

// One record per (individual, disjoint pair) with both memberships in the
// closure; sorted by individual, then pair.
std::vector<ClashRecord>
check_consistency(const Graph& closure,
                  const std::vector<std::pair<std::string, std::string>>& disjoint_pairs);

} // namespace riskman
