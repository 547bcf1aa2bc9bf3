#pragma once

#include "riskman/term.hpp"
#include "riskman/vocabulary.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace riskman {

// Restricted concept grammar: top | bottom | name | {a} | C1 ⊓ ... ⊓ Cn |
// ∃R.C. Conjunctions flatten at construction and need >= 2 conjuncts.
struct ConceptExpr {
    enum class Kind { Top, Bottom, Name, Nominal, And, Exists };

    Kind kind = Kind::Top;
    std::string name;                   // Name: concept IRI
    Term individual;                    // Nominal
    std::string role;                   // Exists: role IRI
    std::vector<ConceptExpr> children;  // And: conjuncts; Exists: single filler

    static ConceptExpr top();
    static ConceptExpr bottom();
    static ConceptExpr cls(std::string iri_text);
    static ConceptExpr nominal(Term individual);
    static ConceptExpr conj(std::vector<ConceptExpr> conjuncts);
    static ConceptExpr exists(std::string role_iri, ConceptExpr filler);

    const ConceptExpr& filler() const { return children.front(); }

    friend bool operator==(const ConceptExpr&, const ConceptExpr&) = default;
};

struct Axiom {
    enum class Kind { Gci, RoleInclusion, Range, Transitive, Disjoint };

    Kind kind = Kind::Gci;
    ConceptExpr lhs, rhs;                      // Gci
    std::vector<std::string> chain;            // RoleInclusion: length >= 1
    std::string super_role;                    // RoleInclusion
    std::string role;                          // Range / Transitive
    std::string range_concept;                 // Range
    std::pair<std::string, std::string> disjoint_pair; // Disjoint (unordered, stored sorted)

    static Axiom gci(ConceptExpr lhs, ConceptExpr rhs);
    static Axiom subclass(std::string sub_iri, std::string super_iri);
    static Axiom role_inclusion(std::vector<std::string> chain, std::string super_role);
    static Axiom range(std::string role_iri, std::string concept_iri);
    static Axiom transitive(std::string role_iri);
    static Axiom disjoint(std::string a, std::string b);

    friend bool operator==(const Axiom&, const Axiom&) = default;
};

struct Ontology {
    std::vector<Axiom> axioms;
    std::vector<Assertion> abox_constants;
    std::vector<std::pair<std::string, std::string>> hierarchy; // (sub, super) pairs
    Vocabulary vocabulary;

    explicit Ontology(Vocabulary vocab = Vocabulary{}) : vocabulary(std::move(vocab)) {}
};

// The full built-in ontology: the schema GCIs and role-inclusion axioms, the
// transitivity declarations, the declared subclass pairs, domain/range axioms
// for every typed schema edge (gt stays untyped), and the derived
// disjointness pairs.
Ontology builtin_riskman_ontology(const Vocabulary& vocab = Vocabulary{});

// All unordered pairs {A, B} such that neither subsumes the other under the
// reflexive-transitive hierarchy AND no declared name descends from both.
// The common-descendant exemption keeps the multiply-inheriting leaf classes
// satisfiable.
std::vector<std::pair<std::string, std::string>>
derive_disjointness(const std::vector<std::pair<std::string, std::string>>& hierarchy,
                    const std::set<std::string>& concept_names);

// Fragment check: GCI left sides are conjunctions of names, nominals, and
// ∃R.(top|name|nominal); right sides are a name, bottom, or ∃R.{a}.
// Returns the offending sub-expression description, or nullopt when legal.
std::optional<std::string> check_fragment(const Axiom& axiom);

// Debug/DSL rendering of expressions (s-expression form).
std::string render_concept(const ConceptExpr& expr, const PrefixMap& prefixes);
std::string render_axiom(const Axiom& axiom, const PrefixMap& prefixes);

} // namespace riskman
