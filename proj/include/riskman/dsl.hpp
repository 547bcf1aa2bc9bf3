#pragma once

#include "riskman/axioms.hpp"
#include "riskman/shapes.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace riskman {

// Name-resolution context for the s-expression DSLs. Bare names resolve
// against the default namespace; pfx:name against the prefix map; <iri>
// verbatim. Role and class positions are checked against the vocabulary
// plus any extension-declared names.
struct DslContext {
    PrefixMap prefixes = PrefixMap::defaults();
    std::string default_ns = kDefaultNamespace;
    Vocabulary vocabulary;
    std::set<std::string> extra_concepts; // user-declared via extension axioms
    std::set<std::string> extra_roles;
    bool require_known_names = true;
    std::size_t constraint_counter = 0; // numbers user constraints across files

    bool known_concept(const std::string& iri_text) const {
        return vocabulary.is_concept(iri_text) || extra_concepts.count(iri_text) > 0;
    }
    bool known_role(const std::string& iri_text) const {
        return vocabulary.is_role(iri_text) || extra_roles.count(iri_text) > 0;
    }
};

// Axiom DSL (';' line comments):
//   concept := "top" | "bottom" | "(class" NAME ")" | "(ind" NAME ")"
//            | "(and" concept+ ")" | "(some" ROLE concept ")"
//   axiom   := "(gci" concept concept ")"
//            | "(role-incl (chain" ROLE+ ")" ROLE ")"
//            | "(range" ROLE NAME ")" | "(transitive" ROLE ")"
//            | "(disjoint" NAME NAME ")"
// New class names on GCI right-hand sides are registered in the context as
// declared extension concepts; every parsed axiom passes the fragment check.
std::vector<Axiom> parse_axiom_dsl(std::string_view text, DslContext& ctx);

// Shape DSL (shares the lexical layer):
//   path  := ROLE | "(inv" path ")" | "(seq" path+ ")" | "(alt" path+ ")"
//          | "(star" path ")" | "(path" ROLE ")"
//   shape := "top" | "(class" NAME ")" | "(ind" NAME ")" | "(and" shape+ ")"
//          | "(not" shape ")" | "(geq" N path shape ")" | "(all" path shape ")"
//          | "(eq" path path ")" | "(some" path shape ")"
//   constraint := "(constraint" NAME shape ")"
std::vector<Constraint> parse_shape_dsl(std::string_view text, DslContext& ctx);

// Inverse of parse_axiom_dsl modulo whitespace: parsing the rendering yields
// the identical axiom list.
std::string render_axiom_dsl(const std::vector<Axiom>& axioms, const DslContext& ctx);

} // namespace riskman
