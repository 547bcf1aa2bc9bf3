#pragma once

#include "riskman/graph.hpp"
#include "riskman/vocabulary.hpp"

#include <set>
#include <string>
#include <vector>

namespace riskman {

// Path expressions over role edges: R | R⁻ | E∪E | E•E | E*. Inverse is
// normalized down to role leaves at construction.
struct PathExpr {
    enum class Kind { Role, InverseRole, Alt, Seq, Star };

    Kind kind = Kind::Role;
    std::string role;             // Role / InverseRole
    std::vector<PathExpr> parts;  // Alt/Seq: >= 2; Star: exactly 1

    static PathExpr role_path(std::string role_iri);
    static PathExpr inverse(PathExpr inner);
    static PathExpr alt(std::vector<PathExpr> parts);
    static PathExpr seq(std::vector<PathExpr> parts);
    static PathExpr star(PathExpr inner);

    const PathExpr& inner() const { return parts.front(); }
    friend bool operator==(const PathExpr&, const PathExpr&) = default;
};

// Node-set-valued shape expressions:
// ⊤ | A | a | φ∧φ | ¬φ | ≥n E.φ | ∀E.φ | E = E.
// Derived forms compile to this core: ∃E.φ = ≥1, ≤n = ¬≥n+1,
// exactly-one = ≥1 ∧ ≤1, E ≠ E = ¬(E = E).
struct ShapeExpr {
    enum class Kind { Top, Concept, Individual, And, Not, AtLeast, ForAll, PathEq };

    Kind kind = Kind::Top;
    std::string concept_name;      // Concept
    Term individual;               // Individual
    std::vector<ShapeExpr> parts;  // And: >= 2; Not/AtLeast/ForAll: filler at [0]
    int min_count = 1;             // AtLeast
    PathExpr path;                 // AtLeast / ForAll / PathEq (left)
    PathExpr path_right;           // PathEq

    static ShapeExpr top();
    static ShapeExpr cls(std::string concept_iri);
    static ShapeExpr individual_shape(Term individual);
    static ShapeExpr conj(std::vector<ShapeExpr> parts);
    static ShapeExpr negate(ShapeExpr inner);
    static ShapeExpr at_least(int n, PathExpr path, ShapeExpr filler);
    static ShapeExpr for_all(PathExpr path, ShapeExpr filler);
    static ShapeExpr path_equal(PathExpr left, PathExpr right);

    // sugar
    static ShapeExpr some(PathExpr path, ShapeExpr filler);
    static ShapeExpr at_most(int n, PathExpr path, ShapeExpr filler);
    static ShapeExpr exactly_one(PathExpr path, ShapeExpr filler);
    static ShapeExpr path_not_equal(PathExpr left, PathExpr right);

    const ShapeExpr& inner() const { return parts.front(); }
    friend bool operator==(const ShapeExpr&, const ShapeExpr&) = default;
};

// --- evaluation over a frozen (materialized) graph -------------------------

// Full binary relation of the path over nodes(graph). Star includes the
// identity pair for every node of the graph.
std::set<std::pair<Term, Term>> eval_path(const Graph& graph, const PathExpr& path);

// Successor set of one node, via on-demand traversal.
std::set<Term> eval_path_from(const Graph& graph, const PathExpr& path, const Term& node);

// Node set satisfying the shape.
std::set<Term> eval_shape(const Graph& graph, const ShapeExpr& shape);

// Membership check at one node; agrees with eval_shape.
bool shape_holds_at(const Graph& graph, const ShapeExpr& shape, const Term& node);

// --- constraints ------------------------------------------------------------

// A <- body, checked as "every node labelled A satisfies the body".
struct Constraint {
    std::string id;            // stable identifier, e.g. "C4.hasSeverity"
    std::string head_concept;  // focus class IRI
    ShapeExpr body;
    std::string variant;          // metavariable instantiation, empty if none
    std::string message_template; // override; empty = derive from failing conjunct
};

struct Schema {
    std::vector<Constraint> constraints; // ids unique
};

// The ten built-in constraints (the path-inequality one expands to four
// variants, one per compared successor role).
std::vector<Constraint> builtin_constraints(const Vocabulary& vocab = Vocabulary{});

struct ShapeViolation {
    std::string constraint_id;
    std::string head_concept;
    Term focus;
    std::string variant;
    std::string message;

    friend auto operator<=>(const ShapeViolation&, const ShapeViolation&) = default;
    friend bool operator==(const ShapeViolation&, const ShapeViolation&) = default;
};

struct ShapeValidationResult {
    bool conforms = true;
    std::vector<ShapeViolation> violations; // sorted by (constraint id, focus IRI)
    std::vector<std::pair<std::string, std::size_t>> focus_counts; // per constraint id
};

// Evaluates every constraint body at every focus node of its head concept.
// The message names the first failing top-level conjunct.
ShapeValidationResult validate(const Graph& closure, const Schema& schema,
                               const PrefixMap& prefixes = PrefixMap::defaults());

// Rendering used for messages and DSL output.
std::string render_path(const PathExpr& path, const PrefixMap& prefixes);
std::string render_shape(const ShapeExpr& shape, const PrefixMap& prefixes);

} // namespace riskman
