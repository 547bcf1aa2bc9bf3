#pragma once

#include "riskman/term.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace riskman {

using TermId = std::uint32_t;
inline constexpr TermId kNoTerm = static_cast<TermId>(-1);

// Indexed in-memory ABox. Terms are interned to dense ids; all indexes are
// kept consistent with the assertion set on every insert. Set semantics:
// re-adding an assertion is a no-op.
//
// Mutable during a single-writer load/saturation phase, then frozen;
// a frozen graph is read-only and safe to share across readers.
class Graph {
public:
    struct Encoded {
        AssertionKind kind;
        TermId predicate; // concept name or role name
        TermId subject;
        TermId object; // kNoTerm for concept assertions
        friend bool operator==(const Encoded&, const Encoded&) = default;
    };

    Graph() = default;

    // --- term interning ---------------------------------------------------
    TermId intern(const Term& term);
    TermId find_id(const Term& term) const; // kNoTerm if absent
    const Term& term_of(TermId id) const { return terms_[id]; }
    std::size_t term_count() const { return terms_.size(); }

    // --- mutation ----------------------------------------------------------
    // Returns true iff the graph grew.
    bool add(const Assertion& assertion);
    bool add_concept(const Term& subject, const Term& concept_name);
    bool add_role(const Term& subject, const Term& role, const Term& object);
    bool add_concept_ids(TermId concept_id, TermId subject_id);
    bool add_role_ids(TermId role_id, TermId subject_id, TermId object_id);

    // Literal-object triples are retained verbatim and excluded from
    // reasoning and shape evaluation.
    bool add_literal_triple(const Term& subject, const Term& predicate, const Term& object);

    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

    // --- queries ------------------------------------------------------------
    std::size_t size() const { return assertions_.size(); }
    bool empty() const { return assertions_.empty(); }

    bool contains(const Assertion& assertion) const;
    bool has_concept(const Term& node, const Term& concept_name) const;
    bool has_role(const Term& subject, const Term& role, const Term& object) const;

    // {b | role(node, b)} and {a | role(a, node)}, sorted by term.
    std::vector<Term> successors(const Term& role, const Term& node) const;
    std::vector<Term> predecessors(const Term& role, const Term& node) const;
    std::vector<Term> concept_members(const Term& concept_name) const;
    std::vector<Term> concepts_of(const Term& node) const;

    // All individuals occurring in any assertion, sorted.
    std::vector<Term> nodes() const;
    std::size_t node_count() const { return nodes_.size(); }
    bool is_node(const Term& term) const;

    // Snapshot of the assertion set, sorted (kind, then fields).
    std::vector<Assertion> assertions() const;
    Assertion decode(const Encoded& e) const;

    const std::vector<Encoded>& encoded() const { return assertions_; }
    const std::vector<std::array<Term, 3>>& literal_triples() const { return literal_triples_; }

    // --- id-level lookups (engine hot path) --------------------------------
    static const std::unordered_set<TermId>& empty_set();
    const std::unordered_set<TermId>& successor_ids(TermId role_id, TermId subject_id) const;
    const std::unordered_set<TermId>& predecessor_ids(TermId role_id, TermId object_id) const;
    const std::unordered_set<TermId>& member_ids(TermId concept_id) const;
    const std::unordered_set<TermId>& concept_ids_of(TermId node_id) const;
    const std::vector<std::pair<TermId, TermId>>& role_pairs(TermId role_id) const;
    const std::unordered_set<TermId>& node_ids() const { return nodes_; }
    bool has_concept_ids(TermId concept_id, TermId subject_id) const;
    bool has_role_ids(TermId role_id, TermId subject_id, TermId object_id) const;

private:
    void ensure_writable() const;
    void touch_node(TermId id) { nodes_.insert(id); }
    static std::uint64_t pair_key(TermId a, TermId b) {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    }

    bool frozen_ = false;

    std::vector<Term> terms_;
    std::unordered_map<Term, TermId, TermHash> term_index_;

    std::vector<Encoded> assertions_;
    std::unordered_set<std::uint64_t> concept_set_;             // key(concept, subject)
    std::unordered_map<std::uint64_t, std::unordered_set<TermId>> succ_; // key(role, subj) -> objs
    std::unordered_map<std::uint64_t, std::unordered_set<TermId>> pred_; // key(role, obj) -> subjs
    std::unordered_map<TermId, std::unordered_set<TermId>> members_;     // concept -> subjects
    std::unordered_map<TermId, std::unordered_set<TermId>> labels_;      // subject -> concepts
    std::unordered_map<TermId, std::vector<std::pair<TermId, TermId>>> role_pairs_;
    std::unordered_set<TermId> nodes_;

    std::vector<std::array<Term, 3>> literal_triples_;
    std::unordered_set<std::uint64_t> literal_seen_; // hash-based dedupe
};

} // namespace riskman
