#include "riskman/shapes.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace riskman {

// --- constructors -----------------------------------------------------------

PathExpr PathExpr::role_path(std::string role_iri) {
    PathExpr p;
    p.kind = Kind::Role;
    p.role = std::move(role_iri);
    return p;
}

PathExpr PathExpr::inverse(PathExpr inner) {
    // Push inversion to the leaves so evaluation never inverts composites:
    // (E1•E2)⁻ = E2⁻•E1⁻, (E1∪E2)⁻ = E1⁻∪E2⁻, (E*)⁻ = (E⁻)*, R⁻⁻ = R.
    switch (inner.kind) {
    case Kind::Role: {
        PathExpr p;
        p.kind = Kind::InverseRole;
        p.role = std::move(inner.role);
        return p;
    }
    case Kind::InverseRole: {
        PathExpr p;
        p.kind = Kind::Role;
        p.role = std::move(inner.role);
        return p;
    }
    case Kind::Alt: {
        std::vector<PathExpr> parts;
        for (auto& part : inner.parts) parts.push_back(inverse(std::move(part)));
        return alt(std::move(parts));
    }
    case Kind::Seq: {
        std::vector<PathExpr> parts;
        for (auto it = inner.parts.rbegin(); it != inner.parts.rend(); ++it)
            parts.push_back(inverse(std::move(*it)));
        return seq(std::move(parts));
    }
    case Kind::Star:
        return star(inverse(std::move(inner.parts.front())));
    }
    throw ValueError("unknown path kind");
}

PathExpr PathExpr::alt(std::vector<PathExpr> parts) {
    if (parts.empty()) throw ValueError("path union requires at least one branch");
    if (parts.size() == 1) return std::move(parts.front());
    PathExpr p;
    p.kind = Kind::Alt;
    p.parts = std::move(parts);
    return p;
}

PathExpr PathExpr::seq(std::vector<PathExpr> parts) {
    if (parts.empty()) throw ValueError("path sequence requires at least one step");
    if (parts.size() == 1) return std::move(parts.front());
    PathExpr p;
    p.kind = Kind::Seq;
    p.parts = std::move(parts);
    return p;
}

PathExpr PathExpr::star(PathExpr inner) {
    PathExpr p;
    p.kind = Kind::Star;
    p.parts.push_back(std::move(inner));
    return p;
}

ShapeExpr ShapeExpr::top() {
    return {};
}

ShapeExpr ShapeExpr::cls(std::string concept_iri) {
    ShapeExpr s;
    s.kind = Kind::Concept;
    s.concept_name = std::move(concept_iri);
    return s;
}

ShapeExpr ShapeExpr::individual_shape(Term individual) {
    ShapeExpr s;
    s.kind = Kind::Individual;
    s.individual = std::move(individual);
    return s;
}

ShapeExpr ShapeExpr::conj(std::vector<ShapeExpr> parts) {
    if (parts.empty()) throw ValueError("shape conjunction requires at least one part");
    if (parts.size() == 1) return std::move(parts.front());
    ShapeExpr s;
    s.kind = Kind::And;
    s.parts = std::move(parts);
    return s;
}

ShapeExpr ShapeExpr::negate(ShapeExpr inner) {
    ShapeExpr s;
    s.kind = Kind::Not;
    s.parts.push_back(std::move(inner));
    return s;
}

ShapeExpr ShapeExpr::at_least(int n, PathExpr path, ShapeExpr filler) {
    if (n < 1) throw ValueError("counting quantifier requires n >= 1");
    ShapeExpr s;
    s.kind = Kind::AtLeast;
    s.min_count = n;
    s.path = std::move(path);
    s.parts.push_back(std::move(filler));
    return s;
}

ShapeExpr ShapeExpr::for_all(PathExpr path, ShapeExpr filler) {
    ShapeExpr s;
    s.kind = Kind::ForAll;
    s.path = std::move(path);
    s.parts.push_back(std::move(filler));
    return s;
}

ShapeExpr ShapeExpr::path_equal(PathExpr left, PathExpr right) {
    ShapeExpr s;
    s.kind = Kind::PathEq;
    s.path = std::move(left);
    s.path_right = std::move(right);
    return s;
}

ShapeExpr ShapeExpr::some(PathExpr path, ShapeExpr filler) {
    return at_least(1, std::move(path), std::move(filler));
}

ShapeExpr ShapeExpr::at_most(int n, PathExpr path, ShapeExpr filler) {
    return negate(at_least(n + 1, std::move(path), std::move(filler)));
}

ShapeExpr ShapeExpr::exactly_one(PathExpr path, ShapeExpr filler) {
    return conj({at_least(1, path, filler), at_most(1, std::move(path), std::move(filler))});
}

ShapeExpr ShapeExpr::path_not_equal(PathExpr left, PathExpr right) {
    return negate(path_equal(std::move(left), std::move(right)));
}

// --- evaluation -------------------------------------------------------------

namespace {

void from_ids(const Graph& g, const PathExpr& path, TermId node, std::set<TermId>& out) {
    switch (path.kind) {
    case PathExpr::Kind::Role: {
        TermId r = g.find_id(iri(path.role));
        if (r == kNoTerm) return;
        for (TermId o : g.successor_ids(r, node)) out.insert(o);
        return;
    }
    case PathExpr::Kind::InverseRole: {
        TermId r = g.find_id(iri(path.role));
        if (r == kNoTerm) return;
        for (TermId s : g.predecessor_ids(r, node)) out.insert(s);
        return;
    }
    case PathExpr::Kind::Alt: {
        for (const auto& part : path.parts) from_ids(g, part, node, out);
        return;
    }
    case PathExpr::Kind::Seq: {
        std::set<TermId> frontier{node};
        for (const auto& part : path.parts) {
            std::set<TermId> next;
            for (TermId n : frontier) from_ids(g, part, n, next);
            frontier = std::move(next);
            if (frontier.empty()) break;
        }
        out.insert(frontier.begin(), frontier.end());
        return;
    }
    case PathExpr::Kind::Star: {
        // Reflexive-transitive closure by breadth-first traversal.
        std::set<TermId> seen{node};
        std::deque<TermId> queue{node};
        while (!queue.empty()) {
            TermId current = queue.front();
            queue.pop_front();
            std::set<TermId> next;
            from_ids(g, path.inner(), current, next);
            for (TermId n : next)
                if (seen.insert(n).second) queue.push_back(n);
        }
        out.insert(seen.begin(), seen.end());
        return;
    }
    }
}

std::set<TermId> successors_of(const Graph& g, const PathExpr& path, TermId node) {
    std::set<TermId> out;
    from_ids(g, path, node, out);
    return out;
}

// Successor-set equality with early exit: when the left path ends in a plain
// (inverse) role step, its possibly large final fan-out is streamed against
// the right set instead of being materialized. The first element outside the
// right set decides the comparison.
bool path_sets_equal(const Graph& g, const PathExpr& left, const PathExpr& right, TermId node) {
    std::set<TermId> right_set = successors_of(g, right, node);

    const PathExpr* last = nullptr;
    std::set<TermId> frontier;
    if (left.kind == PathExpr::Kind::Seq &&
        (left.parts.back().kind == PathExpr::Kind::Role ||
         left.parts.back().kind == PathExpr::Kind::InverseRole)) {
        last = &left.parts.back();
        frontier.insert(node);
        for (std::size_t i = 0; i + 1 < left.parts.size(); ++i) {
            std::set<TermId> next;
            for (TermId f : frontier) from_ids(g, left.parts[i], f, next);
            frontier = std::move(next);
            if (frontier.empty()) break;
        }
    } else if (left.kind == PathExpr::Kind::Role || left.kind == PathExpr::Kind::InverseRole) {
        last = &left;
        frontier.insert(node);
    }

    if (!last) return successors_of(g, left, node) == right_set;

    TermId role_id = g.find_id(iri(last->role));
    if (role_id == kNoTerm) return right_set.empty();
    std::set<TermId> seen;
    for (TermId f : frontier) {
        const auto& ids = last->kind == PathExpr::Kind::Role ? g.successor_ids(role_id, f)
                                                             : g.predecessor_ids(role_id, f);
        for (TermId b : ids) {
            if (!right_set.count(b)) return false;
            seen.insert(b);
        }
    }
    return seen.size() == right_set.size();
}

std::vector<TermId> sorted_node_ids(const Graph& g) {
    std::vector<TermId> ids(g.node_ids().begin(), g.node_ids().end());
    std::sort(ids.begin(), ids.end());
    return ids;
}

bool holds_at_ids(const Graph& g, const ShapeExpr& shape, TermId node) {
    switch (shape.kind) {
    case ShapeExpr::Kind::Top:
        return true;
    case ShapeExpr::Kind::Concept: {
        TermId c = g.find_id(iri(shape.concept_name));
        return c != kNoTerm && g.has_concept_ids(c, node);
    }
    case ShapeExpr::Kind::Individual: {
        TermId id = g.find_id(shape.individual);
        return id != kNoTerm && id == node;
    }
    case ShapeExpr::Kind::And:
        for (const auto& part : shape.parts)
            if (!holds_at_ids(g, part, node)) return false;
        return true;
    case ShapeExpr::Kind::Not:
        return !holds_at_ids(g, shape.inner(), node);
    case ShapeExpr::Kind::AtLeast: {
        int count = 0;
        for (TermId b : successors_of(g, shape.path, node)) {
            if (holds_at_ids(g, shape.inner(), b) && ++count >= shape.min_count) return true;
        }
        return false;
    }
    case ShapeExpr::Kind::ForAll: {
        for (TermId b : successors_of(g, shape.path, node))
            if (!holds_at_ids(g, shape.inner(), b)) return false;
        return true;
    }
    case ShapeExpr::Kind::PathEq:
        return path_sets_equal(g, shape.path, shape.path_right, node);
    }
    return false;
}

} // namespace

std::set<Term> eval_path_from(const Graph& graph, const PathExpr& path, const Term& node) {
    TermId id = graph.find_id(node);
    std::set<Term> out;
    if (id == kNoTerm || !graph.node_ids().count(id)) return out;
    for (TermId b : successors_of(graph, path, id)) out.insert(graph.term_of(b));
    return out;
}

std::set<std::pair<Term, Term>> eval_path(const Graph& graph, const PathExpr& path) {
    std::set<std::pair<Term, Term>> out;
    for (TermId a : sorted_node_ids(graph)) {
        for (TermId b : successors_of(graph, path, a)) {
            // The relation lives over the graph's nodes; nominal-only terms
            // (interned but never asserted) do not appear.
            if (graph.node_ids().count(b)) out.emplace(graph.term_of(a), graph.term_of(b));
        }
    }
    return out;
}

std::set<Term> eval_shape(const Graph& graph, const ShapeExpr& shape) {
    std::set<Term> out;
    for (TermId a : sorted_node_ids(graph))
        if (holds_at_ids(graph, shape, a)) out.insert(graph.term_of(a));
    return out;
}

bool shape_holds_at(const Graph& graph, const ShapeExpr& shape, const Term& node) {
    TermId id = graph.find_id(node);
    if (id == kNoTerm || !graph.node_ids().count(id)) return false;
    return holds_at_ids(graph, shape, id);
}

// --- built-in constraints -----------------------------------------------------

std::vector<Constraint> builtin_constraints(const Vocabulary& vocab) {
    std::vector<Constraint> out;
    auto role = [&](const char* local) { return PathExpr::role_path(vocab.iri_for(local)); };
    auto exactly_one = [&](const char* local) {
        return ShapeExpr::exactly_one(role(local), ShapeExpr::top());
    };

    out.push_back({"C1", vocab.iri_for("AnalyzedRisk"),
                   ShapeExpr::conj({exactly_one("hasDomainSpecificHazard"), exactly_one("hasHarm"),
                                    exactly_one("hasDeviceContext"),
                                    exactly_one("hasInitialRiskLevel"),
                                    exactly_one("hasHazardousSituation")}),
                   "", ""});

    out.push_back({"C2", vocab.iri_for("AssuranceSDA"),
                   ShapeExpr::conj({ShapeExpr::for_all(role("hasSubSDA"),
                                                       ShapeExpr::cls(vocab.iri_for("AssuranceSDA"))),
                                    exactly_one("hasSafetyAssurance")}),
                   "", ""});

    out.push_back({"C3", vocab.iri_for("ControlledRisk"),
                   ShapeExpr::conj({exactly_one("isMitigatedBy"), exactly_one("hasAnalyzedRisk"),
                                    exactly_one("hasResidualRiskLevel")}),
                   "", ""});

    // Non-increasing residual risk level, one variant per compared role:
    // (hasAnalyzedRisk • hasInitialRiskLevel • X • gt⁻ • X⁻) ≠ hasResidualRiskLevel.
    for (const char* x : {"hasProbability", "hasProbability1", "hasProbability2", "hasSeverity"}) {
        PathExpr left = PathExpr::seq({role("hasAnalyzedRisk"), role("hasInitialRiskLevel"),
                                       role(x), PathExpr::inverse(role("gt")),
                                       PathExpr::inverse(role(x))});
        out.push_back({std::string("C4.") + x, vocab.iri_for("ControlledRisk"),
                       ShapeExpr::path_not_equal(std::move(left), role("hasResidualRiskLevel")),
                       x,
                       std::string("residual risk level is not lower: initial-level ") + x +
                           " increase path matches hasResidualRiskLevel"});
    }

    out.push_back({"C5", vocab.iri_for("DomainSpecificHazard"),
                   ShapeExpr::conj({exactly_one("hasDeviceComponent"),
                                    exactly_one("hasDeviceFunction"), exactly_one("hasHazard")}),
                   "", ""});

    out.push_back({"C6", vocab.iri_for("RiskLevel"),
                   ShapeExpr::conj({exactly_one("hasProbability"), exactly_one("hasSeverity")}),
                   "", ""});

    out.push_back({"C7", vocab.iri_for("SafeDesignArgument"),
                   ShapeExpr::some(PathExpr::star(role("hasSubSDA")),
                                   ShapeExpr::cls(vocab.iri_for("SDAI"))),
                   "", "no SDAI reachable via hasSubSDA*"});

    return out;
}

// --- rendering and messages ---------------------------------------------------

namespace {

std::string short_name(const std::string& iri_text, const PrefixMap& prefixes) {
    std::string shortened = prefixes.shorten(iri_text);
    if (shortened != iri_text) {
        auto colon = shortened.find(':');
        // rm:X reads better as X in messages; other prefixes stay qualified.
        if (shortened.compare(0, colon, "rm") == 0) return shortened.substr(colon + 1);
        return shortened;
    }
    return local_name(std::string_view(iri_text));
}

} // namespace

std::string render_path(const PathExpr& path, const PrefixMap& prefixes) {
    switch (path.kind) {
    case PathExpr::Kind::Role:
        return short_name(path.role, prefixes);
    case PathExpr::Kind::InverseRole:
        return short_name(path.role, prefixes) + "⁻";
    case PathExpr::Kind::Alt: {
        std::string out = "(";
        for (std::size_t i = 0; i < path.parts.size(); ++i) {
            if (i) out += "∪";
            out += render_path(path.parts[i], prefixes);
        }
        return out + ")";
    }
    case PathExpr::Kind::Seq: {
        std::string out;
        for (std::size_t i = 0; i < path.parts.size(); ++i) {
            if (i) out += "•";
            out += render_path(path.parts[i], prefixes);
        }
        return out;
    }
    case PathExpr::Kind::Star: {
        const PathExpr& inner = path.inner();
        std::string body = render_path(inner, prefixes);
        if (inner.kind == PathExpr::Kind::Alt || inner.kind == PathExpr::Kind::Seq)
            return "(" + body + ")*";
        return body + "*";
    }
    }
    return {};
}

std::string render_shape(const ShapeExpr& shape, const PrefixMap& prefixes) {
    switch (shape.kind) {
    case ShapeExpr::Kind::Top:
        return "⊤";
    case ShapeExpr::Kind::Concept:
        return short_name(shape.concept_name, prefixes);
    case ShapeExpr::Kind::Individual:
        return "{" + short_name(shape.individual.value, prefixes) + "}";
    case ShapeExpr::Kind::And: {
        std::string out;
        for (std::size_t i = 0; i < shape.parts.size(); ++i) {
            if (i) out += " ∧ ";
            out += render_shape(shape.parts[i], prefixes);
        }
        return "(" + out + ")";
    }
    case ShapeExpr::Kind::Not:
        return "¬" + render_shape(shape.inner(), prefixes);
    case ShapeExpr::Kind::AtLeast:
        return "≥" + std::to_string(shape.min_count) + " " + render_path(shape.path, prefixes) +
               "." + render_shape(shape.inner(), prefixes);
    case ShapeExpr::Kind::ForAll:
        return "∀" + render_path(shape.path, prefixes) + "." +
               render_shape(shape.inner(), prefixes);
    case ShapeExpr::Kind::PathEq:
        return render_path(shape.path, prefixes) + " = " + render_path(shape.path_right, prefixes);
    }
    return {};
}

namespace {

// Is this subtree the exactly-one sugar (≥1 E.φ ∧ ¬≥2 E.φ)?
bool is_exactly_one(const ShapeExpr& shape, const PathExpr** path_out) {
    if (shape.kind != ShapeExpr::Kind::And || shape.parts.size() != 2) return false;
    const ShapeExpr& lo = shape.parts[0];
    const ShapeExpr& hi = shape.parts[1];
    if (lo.kind != ShapeExpr::Kind::AtLeast || lo.min_count != 1) return false;
    if (hi.kind != ShapeExpr::Kind::Not || hi.inner().kind != ShapeExpr::Kind::AtLeast ||
        hi.inner().min_count != 2)
        return false;
    if (!(lo.path == hi.inner().path)) return false;
    *path_out = &lo.path;
    return true;
}

std::size_t count_matching(const Graph& g, const ShapeExpr& quantifier, const Term& node) {
    std::size_t count = 0;
    for (const Term& b : eval_path_from(g, quantifier.path, node))
        if (shape_holds_at(g, quantifier.inner(), b)) ++count;
    return count;
}

// Human-readable reason why `shape` fails at `node` (which it must).
std::string describe_failure(const Graph& g, const ShapeExpr& shape, const Term& node,
                             const PrefixMap& prefixes) {
    const PathExpr* eo_path = nullptr;
    if (is_exactly_one(shape, &eo_path)) {
        std::size_t n = count_matching(g, shape.parts[0], node);
        return "expected exactly 1 " + render_path(*eo_path, prefixes) + " successor, found " +
               std::to_string(n);
    }
    switch (shape.kind) {
    case ShapeExpr::Kind::Top:
        return "unsatisfiable"; // cannot fail
    case ShapeExpr::Kind::Concept:
        return "not labelled " + short_name(shape.concept_name, prefixes);
    case ShapeExpr::Kind::Individual:
        return "is not " + short_name(shape.individual.value, prefixes);
    case ShapeExpr::Kind::And:
        for (const auto& part : shape.parts)
            if (!shape_holds_at(g, part, node)) return describe_failure(g, part, node, prefixes);
        return "conjunction failed";
    case ShapeExpr::Kind::Not: {
        const ShapeExpr& inner = shape.inner();
        if (inner.kind == ShapeExpr::Kind::PathEq)
            return render_path(inner.path, prefixes) + " successors equal " +
                   render_path(inner.path_right, prefixes) + " successors";
        if (inner.kind == ShapeExpr::Kind::AtLeast)
            return "expected at most " + std::to_string(inner.min_count - 1) + " " +
                   render_path(inner.path, prefixes) + " successors matching " +
                   render_shape(inner.inner(), prefixes) + ", found " +
                   std::to_string(count_matching(g, inner, node));
        return "unexpectedly satisfies " + render_shape(inner, prefixes);
    }
    case ShapeExpr::Kind::AtLeast: {
        if (shape.min_count == 1 && shape.path.kind == PathExpr::Kind::Star &&
            shape.inner().kind == ShapeExpr::Kind::Concept)
            return "no " + short_name(shape.inner().concept_name, prefixes) + " reachable via " +
                   render_path(shape.path, prefixes);
        return "expected at least " + std::to_string(shape.min_count) + " " +
               render_path(shape.path, prefixes) + " successors matching " +
               render_shape(shape.inner(), prefixes) + ", found " +
               std::to_string(count_matching(g, shape, node));
    }
    case ShapeExpr::Kind::ForAll: {
        for (const Term& b : eval_path_from(g, shape.path, node))
            if (!shape_holds_at(g, shape.inner(), b))
                return render_path(shape.path, prefixes) + " successor " +
                       short_name(b.value, prefixes) + " does not satisfy " +
                       render_shape(shape.inner(), prefixes);
        return "universal restriction failed";
    }
    case ShapeExpr::Kind::PathEq:
        return render_path(shape.path, prefixes) + " successors differ from " +
               render_path(shape.path_right, prefixes) + " successors";
    }
    return "constraint body not satisfied";
}

} // namespace

ShapeValidationResult validate(const Graph& closure, const Schema& schema,
                               const PrefixMap& prefixes) {
    ShapeValidationResult result;
    for (const auto& constraint : schema.constraints) {
        std::vector<Term> focus = closure.concept_members(iri(constraint.head_concept));
        result.focus_counts.emplace_back(constraint.id, focus.size());
        for (const Term& node : focus) {
            if (shape_holds_at(closure, constraint.body, node)) continue;
            std::string message = constraint.message_template.empty()
                                      ? describe_failure(closure, constraint.body, node, prefixes)
                                      : constraint.message_template;
            result.violations.push_back(
                {constraint.id, constraint.head_concept, node, constraint.variant, message});
        }
    }
    std::sort(result.violations.begin(), result.violations.end(),
              [](const ShapeViolation& a, const ShapeViolation& b) {
                  return std::tie(a.constraint_id, a.focus) < std::tie(b.constraint_id, b.focus);
              });
    result.conforms = result.violations.empty();
    return result;
}

} // namespace riskman
