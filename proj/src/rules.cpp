#include "riskman/reasoner.hpp"

namespace riskman {

namespace {

// Conditions for one GCI conjunct, focused on variable 0.
void append_conjunct(Rule& rule, const ConceptExpr& c) {
    switch (c.kind) {
    case ConceptExpr::Kind::Top:
        return; // no condition
    case ConceptExpr::Kind::Name: {
        RuleCondition cond;
        cond.kind = RuleCondition::Kind::ConceptMember;
        cond.concept_name = c.name;
        cond.subject_var = 0;
        rule.body.push_back(std::move(cond));
        return;
    }
    case ConceptExpr::Kind::Exists: {
        const ConceptExpr& filler = c.filler();
        if (filler.kind == ConceptExpr::Kind::Nominal) {
            RuleCondition cond;
            cond.kind = RuleCondition::Kind::RoleEdgeToConstant;
            cond.role = c.role;
            cond.subject_var = 0;
            cond.constant = filler.individual;
            rule.body.push_back(std::move(cond));
            return;
        }
        int target = rule.var_count++;
        RuleCondition edge;
        edge.kind = RuleCondition::Kind::RoleEdge;
        edge.role = c.role;
        edge.subject_var = 0;
        edge.object_var = target;
        rule.body.push_back(std::move(edge));
        if (filler.kind == ConceptExpr::Kind::Name) {
            RuleCondition member;
            member.kind = RuleCondition::Kind::ConceptMember;
            member.concept_name = filler.name;
            member.subject_var = target;
            rule.body.push_back(std::move(member));
        }
        return;
    }
    case ConceptExpr::Kind::Nominal:
        // {a} as a bare left conjunct has no condition encoding; the
        // fragment check upstream already rejects it.
        throw ValueError("nominal conjunct on a GCI left-hand side is not compilable");
    default:
        throw ValueError("unsupported concept expression in rule compilation");
    }
}

Rule compile_gci(const Axiom& axiom, const std::string& id) {
    Rule rule;
    rule.id = id;
    rule.var_count = 1;

    if (axiom.lhs.kind == ConceptExpr::Kind::And) {
        for (const auto& c : axiom.lhs.children) append_conjunct(rule, c);
    } else {
        append_conjunct(rule, axiom.lhs);
    }

    const ConceptExpr& rhs = axiom.rhs;
    switch (rhs.kind) {
    case ConceptExpr::Kind::Name:
        rule.head.kind = RuleHead::Kind::AddConcept;
        rule.head.concept_name = rhs.name;
        rule.head.subject_var = 0;
        break;
    case ConceptExpr::Kind::Bottom:
        rule.head.kind = RuleHead::Kind::Clash;
        rule.head.subject_var = 0;
        rule.head.clash_a = "bottom";
        rule.head.clash_b = "bottom";
        break;
    case ConceptExpr::Kind::Exists:
        rule.head.kind = RuleHead::Kind::AddRoleToConstant;
        rule.head.role = rhs.role;
        rule.head.subject_var = 0;
        rule.head.constant = rhs.filler().individual;
        break;
    default:
        throw ValueError("unsupported GCI right-hand side in rule compilation");
    }
    return rule;
}

} // namespace

std::vector<Rule> compile_axioms(const std::vector<Axiom>& axioms, const std::string& aux_ns) {
    std::vector<Rule> rules;
    std::size_t aux_counter = 0;

    for (std::size_t i = 0; i < axioms.size(); ++i) {
        const Axiom& axiom = axioms[i];
        std::string id;

        switch (axiom.kind) {
        case Axiom::Kind::Gci:
            id = "gci:" + std::to_string(i);
            if (auto reason = check_fragment(axiom))
                throw ValueError("unsupported axiom: " + *reason);
            rules.push_back(compile_gci(axiom, id));
            break;

        case Axiom::Kind::Range: {
            Rule rule;
            rule.id = "range:" + std::to_string(i);
            rule.var_count = 2;
            RuleCondition edge;
            edge.kind = RuleCondition::Kind::RoleEdge;
            edge.role = axiom.role;
            edge.subject_var = 0;
            edge.object_var = 1;
            rule.body.push_back(std::move(edge));
            rule.head.kind = RuleHead::Kind::AddConcept;
            rule.head.concept_name = axiom.range_concept;
            rule.head.subject_var = 1;
            rules.push_back(std::move(rule));
            break;
        }

        case Axiom::Kind::Transitive: {
            Rule rule;
            rule.id = "trans:" + std::to_string(i);
            rule.var_count = 3;
            for (int k = 0; k < 2; ++k) {
                RuleCondition edge;
                edge.kind = RuleCondition::Kind::RoleEdge;
                edge.role = axiom.role;
                edge.subject_var = k;
                edge.object_var = k + 1;
                rule.body.push_back(std::move(edge));
            }
            rule.head.kind = RuleHead::Kind::AddRole;
            rule.head.role = axiom.role;
            rule.head.subject_var = 0;
            rule.head.object_var = 2;
            rules.push_back(std::move(rule));
            break;
        }

        case Axiom::Kind::Disjoint: {
            Rule rule;
            rule.id = "disjoint:" + std::to_string(i);
            rule.var_count = 1;
            for (const std::string& name : {axiom.disjoint_pair.first, axiom.disjoint_pair.second}) {
                RuleCondition member;
                member.kind = RuleCondition::Kind::ConceptMember;
                member.concept_name = name;
                member.subject_var = 0;
                rule.body.push_back(std::move(member));
            }
            rule.head.kind = RuleHead::Kind::Clash;
            rule.head.subject_var = 0;
            rule.head.clash_a = axiom.disjoint_pair.first;
            rule.head.clash_b = axiom.disjoint_pair.second;
            rules.push_back(std::move(rule));
            break;
        }

        case Axiom::Kind::RoleInclusion: {
            // Decompose R1 ∘ ... ∘ Rk ⊑ S into binary joins; chains longer
            // than two thread through generated auxiliary roles.
            std::vector<std::string> chain = axiom.chain;
            std::string target = axiom.super_role;
            std::size_t part = 0;
            while (chain.size() > 2) {
                std::string aux = make_aux_role(aux_ns, aux_counter++);
                Rule rule;
                rule.id = "ria:" + std::to_string(i) + "." + std::to_string(part++);
                rule.var_count = 3;
                for (int k = 0; k < 2; ++k) {
                    RuleCondition edge;
                    edge.kind = RuleCondition::Kind::RoleEdge;
                    edge.role = chain[k];
                    edge.subject_var = k;
                    edge.object_var = k + 1;
                    rule.body.push_back(std::move(edge));
                }
                rule.head.kind = RuleHead::Kind::AddRole;
                rule.head.role = aux;
                rule.head.subject_var = 0;
                rule.head.object_var = 2;
                rules.push_back(std::move(rule));
                chain.erase(chain.begin(), chain.begin() + 2);
                chain.insert(chain.begin(), aux);
            }

            Rule rule;
            rule.id = "ria:" + std::to_string(i) +
                      (part > 0 ? "." + std::to_string(part) : std::string());
            if (chain.size() == 1) {
                rule.var_count = 2;
                RuleCondition edge;
                edge.kind = RuleCondition::Kind::RoleEdge;
                edge.role = chain[0];
                edge.subject_var = 0;
                edge.object_var = 1;
                rule.body.push_back(std::move(edge));
                rule.head.kind = RuleHead::Kind::AddRole;
                rule.head.role = target;
                rule.head.subject_var = 0;
                rule.head.object_var = 1;
            } else {
                rule.var_count = 3;
                for (int k = 0; k < 2; ++k) {
                    RuleCondition edge;
                    edge.kind = RuleCondition::Kind::RoleEdge;
                    edge.role = chain[static_cast<std::size_t>(k)];
                    edge.subject_var = k;
                    edge.object_var = k + 1;
                    rule.body.push_back(std::move(edge));
                }
                rule.head.kind = RuleHead::Kind::AddRole;
                rule.head.role = target;
                rule.head.subject_var = 0;
                rule.head.object_var = 2;
            }
            rules.push_back(std::move(rule));
            break;
        }
        }
    }
    return rules;
}

std::vector<Rule> compile_rules(const Ontology& ontology) {
    return compile_axioms(ontology.axioms, ontology.vocabulary.ns());
}

} // namespace riskman
