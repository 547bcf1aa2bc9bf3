#pragma once

// Brute-force relational semantics for paths and shapes, written against the
// set-algebra definitions directly. Test oracle only; shares nothing with
// the production evaluator besides the expression types.

#include "riskman/shapes.hpp"

#include <map>
#include <random>
#include <set>
#include <vector>

namespace riskman::testing {

using Relation = std::set<std::pair<Term, Term>>;

inline Relation compose(const Relation& r1, const Relation& r2) {
    Relation out;
    for (const auto& [a, b] : r1)
        for (const auto& [c, d] : r2)
            if (b == c) out.emplace(a, d);
    return out;
}

inline Relation oracle_path(const Graph& g, const PathExpr& path) {
    switch (path.kind) {
    case PathExpr::Kind::Role: {
        Relation out;
        for (const auto& a : g.assertions())
            if (a.kind == AssertionKind::Role && a.role.value == path.role)
                out.emplace(a.subject, a.object);
        return out;
    }
    case PathExpr::Kind::InverseRole: {
        Relation out;
        for (const auto& a : g.assertions())
            if (a.kind == AssertionKind::Role && a.role.value == path.role)
                out.emplace(a.object, a.subject);
        return out;
    }
    case PathExpr::Kind::Alt: {
        Relation out;
        for (const auto& p : path.parts) {
            Relation r = oracle_path(g, p);
            out.insert(r.begin(), r.end());
        }
        return out;
    }
    case PathExpr::Kind::Seq: {
        Relation out = oracle_path(g, path.parts[0]);
        for (std::size_t i = 1; i < path.parts.size(); ++i)
            out = compose(out, oracle_path(g, path.parts[i]));
        return out;
    }
    case PathExpr::Kind::Star: {
        Relation base = oracle_path(g, path.inner());
        Relation out;
        for (const auto& n : g.nodes()) out.emplace(n, n);
        bool changed = true;
        while (changed) {
            changed = false;
            Relation grown = out;
            for (const auto& [a, b] : out)
                for (const auto& [c, d] : base)
                    if (b == c && grown.emplace(a, d).second) changed = true;
            out = std::move(grown);
        }
        return out;
    }
    }
    return {};
}

inline std::set<Term> oracle_shape(const Graph& g, const ShapeExpr& shape) {
    std::vector<Term> node_list = g.nodes();
    std::set<Term> nodes(node_list.begin(), node_list.end());
    switch (shape.kind) {
    case ShapeExpr::Kind::Top:
        return nodes;
    case ShapeExpr::Kind::Concept: {
        std::set<Term> out;
        for (const auto& a : g.assertions())
            if (a.kind == AssertionKind::Concept && a.concept_name.value == shape.concept_name)
                out.insert(a.subject);
        return out;
    }
    case ShapeExpr::Kind::Individual: {
        std::set<Term> out;
        if (nodes.count(shape.individual)) out.insert(shape.individual);
        return out;
    }
    case ShapeExpr::Kind::And: {
        std::set<Term> out = oracle_shape(g, shape.parts[0]);
        for (std::size_t i = 1; i < shape.parts.size(); ++i) {
            std::set<Term> next = oracle_shape(g, shape.parts[i]);
            std::set<Term> inter;
            for (const auto& t : out)
                if (next.count(t)) inter.insert(t);
            out = std::move(inter);
        }
        return out;
    }
    case ShapeExpr::Kind::Not: {
        std::set<Term> inner = oracle_shape(g, shape.inner());
        std::set<Term> out;
        for (const auto& t : nodes)
            if (!inner.count(t)) out.insert(t);
        return out;
    }
    case ShapeExpr::Kind::AtLeast: {
        Relation rel = oracle_path(g, shape.path);
        std::set<Term> filler = oracle_shape(g, shape.inner());
        std::map<Term, int> counts;
        for (const auto& [a, b] : rel)
            if (filler.count(b)) ++counts[a];
        std::set<Term> out;
        for (const auto& [t, c] : counts)
            if (c >= shape.min_count) out.insert(t);
        return out;
    }
    case ShapeExpr::Kind::ForAll: {
        Relation rel = oracle_path(g, shape.path);
        std::set<Term> filler = oracle_shape(g, shape.inner());
        std::set<Term> out = nodes;
        for (const auto& [a, b] : rel)
            if (!filler.count(b)) out.erase(a);
        return out;
    }
    case ShapeExpr::Kind::PathEq: {
        Relation left = oracle_path(g, shape.path);
        Relation right = oracle_path(g, shape.path_right);
        std::set<Term> out;
        for (const auto& a : nodes) {
            std::set<Term> ls, rs;
            for (const auto& [x, y] : left)
                if (x == a) ls.insert(y);
            for (const auto& [x, y] : right)
                if (x == a) rs.insert(y);
            if (ls == rs) out.insert(a);
        }
        return out;
    }
    }
    return {};
}

// Depth-bounded random paths and shapes over the real vocabulary.
struct ShapeGen {
    std::mt19937 rng;
    Vocabulary vocab;
    std::vector<std::string> roles;
    std::vector<std::string> concepts;

    explicit ShapeGen(unsigned seed)
        : rng(seed), roles(vocab.role_names().begin(), vocab.role_names().end()),
          concepts(vocab.concept_names().begin(), vocab.concept_names().end()) {}

    std::string role() {
        std::uniform_int_distribution<std::size_t> d(0, roles.size() - 1);
        return roles[d(rng)];
    }

    PathExpr path(int depth) {
        std::uniform_int_distribution<int> d(0, depth <= 0 ? 1 : 4);
        switch (d(rng)) {
        case 0: return PathExpr::role_path(role());
        case 1: return PathExpr::inverse(PathExpr::role_path(role()));
        case 2: return PathExpr::alt({path(depth - 1), path(depth - 1)});
        case 3: return PathExpr::seq({path(depth - 1), path(depth - 1)});
        default: return PathExpr::star(path(depth - 1));
        }
    }

    ShapeExpr shape(int depth, const std::vector<Term>& individuals) {
        std::uniform_int_distribution<int> d(0, depth <= 0 ? 2 : 7);
        switch (d(rng)) {
        case 0: return ShapeExpr::top();
        case 1: {
            std::uniform_int_distribution<std::size_t> c(0, concepts.size() - 1);
            return ShapeExpr::cls(concepts[c(rng)]);
        }
        case 2: {
            if (individuals.empty()) return ShapeExpr::top();
            std::uniform_int_distribution<std::size_t> i(0, individuals.size() - 1);
            return ShapeExpr::individual_shape(individuals[i(rng)]);
        }
        case 3:
            return ShapeExpr::conj({shape(depth - 1, individuals), shape(depth - 1, individuals)});
        case 4: return ShapeExpr::negate(shape(depth - 1, individuals));
        case 5: {
            std::uniform_int_distribution<int> n(1, 3);
            return ShapeExpr::at_least(n(rng), path(depth - 1), shape(depth - 1, individuals));
        }
        case 6: return ShapeExpr::for_all(path(depth - 1), shape(depth - 1, individuals));
        default: return ShapeExpr::path_equal(path(depth - 1), path(depth - 1));
        }
    }
};

} // namespace riskman::testing
