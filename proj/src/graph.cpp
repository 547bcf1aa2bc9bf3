#include "riskman/graph.hpp"

#include <algorithm>

namespace riskman {

TermId Graph::intern(const Term& term) {
    auto it = term_index_.find(term);
    if (it != term_index_.end()) return it->second;
    TermId id = static_cast<TermId>(terms_.size());
    terms_.push_back(term);
    term_index_.emplace(terms_.back(), id);
    return id;
}

TermId Graph::find_id(const Term& term) const {
    auto it = term_index_.find(term);
    return it == term_index_.end() ? kNoTerm : it->second;
}

void Graph::ensure_writable() const {
    if (frozen_) throw FrozenGraphError("graph is frozen; writes are not allowed");
}

bool Graph::add_concept_ids(TermId concept_id, TermId subject_id) {
    ensure_writable();
    if (!concept_set_.insert(pair_key(concept_id, subject_id)).second) return false;
    assertions_.push_back({AssertionKind::Concept, concept_id, subject_id, kNoTerm});
    members_[concept_id].insert(subject_id);
    labels_[subject_id].insert(concept_id);
    touch_node(subject_id);
    return true;
}

bool Graph::add_role_ids(TermId role_id, TermId subject_id, TermId object_id) {
    ensure_writable();
    auto [it, inserted] = succ_[pair_key(role_id, subject_id)].insert(object_id);
    if (!inserted) return false;
    assertions_.push_back({AssertionKind::Role, role_id, subject_id, object_id});
    pred_[pair_key(role_id, object_id)].insert(subject_id);
    role_pairs_[role_id].emplace_back(subject_id, object_id);
    touch_node(subject_id);
    touch_node(object_id);
    return true;
}

bool Graph::add_concept(const Term& subject, const Term& concept_name) {
    if (!subject.is_individual())
        throw ValueError("assertion subject must be an individual (iri or blank)");
    if (concept_name.kind != TermKind::Iri)
        throw ValueError("concept name must be an IRI");
    return add_concept_ids(intern(concept_name), intern(subject));
}

bool Graph::add_role(const Term& subject, const Term& role, const Term& object) {
    if (!subject.is_individual() || !object.is_individual())
        throw ValueError("role assertion subject/object must be individuals");
    if (role.kind != TermKind::Iri)
        throw ValueError("role name must be an IRI");
    return add_role_ids(intern(role), intern(subject), intern(object));
}

bool Graph::add(const Assertion& assertion) {
    if (assertion.kind == AssertionKind::Concept)
        return add_concept(assertion.subject, assertion.concept_name);
    return add_role(assertion.subject, assertion.role, assertion.object);
}

bool Graph::add_literal_triple(const Term& subject, const Term& predicate, const Term& object) {
    ensure_writable();
    if (!object.is_literal()) throw ValueError("literal triple requires a literal object");
    TermHash h;
    std::uint64_t key = h(subject) * 1000003u ^ h(predicate) * 8191u ^ h(object);
    // Hash-keyed dedupe; collisions fall back to a linear check.
    if (!literal_seen_.insert(key).second) {
        for (const auto& t : literal_triples_)
            if (t[0] == subject && t[1] == predicate && t[2] == object) return false;
    }
    literal_triples_.push_back({subject, predicate, object});
    return true;
}

bool Graph::contains(const Assertion& assertion) const {
    if (assertion.kind == AssertionKind::Concept)
        return has_concept(assertion.subject, assertion.concept_name);
    return has_role(assertion.subject, assertion.role, assertion.object);
}

bool Graph::has_concept(const Term& node, const Term& concept_name) const {
    TermId c = find_id(concept_name), s = find_id(node);
    if (c == kNoTerm || s == kNoTerm) return false;
    return has_concept_ids(c, s);
}

bool Graph::has_role(const Term& subject, const Term& role, const Term& object) const {
    TermId r = find_id(role), s = find_id(subject), o = find_id(object);
    if (r == kNoTerm || s == kNoTerm || o == kNoTerm) return false;
    return has_role_ids(r, s, o);
}

bool Graph::has_concept_ids(TermId concept_id, TermId subject_id) const {
    return concept_set_.count(pair_key(concept_id, subject_id)) > 0;
}

bool Graph::has_role_ids(TermId role_id, TermId subject_id, TermId object_id) const {
    auto it = succ_.find(pair_key(role_id, subject_id));
    return it != succ_.end() && it->second.count(object_id) > 0;
}

const std::unordered_set<TermId>& Graph::empty_set() {
    static const std::unordered_set<TermId> empty;
    return empty;
}

const std::unordered_set<TermId>& Graph::successor_ids(TermId role_id, TermId subject_id) const {
    auto it = succ_.find(pair_key(role_id, subject_id));
    return it == succ_.end() ? empty_set() : it->second;
}

const std::unordered_set<TermId>& Graph::predecessor_ids(TermId role_id, TermId object_id) const {
    auto it = pred_.find(pair_key(role_id, object_id));
    return it == pred_.end() ? empty_set() : it->second;
}

const std::unordered_set<TermId>& Graph::member_ids(TermId concept_id) const {
    auto it = members_.find(concept_id);
    return it == members_.end() ? empty_set() : it->second;
}

const std::unordered_set<TermId>& Graph::concept_ids_of(TermId node_id) const {
    auto it = labels_.find(node_id);
    return it == labels_.end() ? empty_set() : it->second;
}

const std::vector<std::pair<TermId, TermId>>& Graph::role_pairs(TermId role_id) const {
    static const std::vector<std::pair<TermId, TermId>> empty;
    auto it = role_pairs_.find(role_id);
    return it == role_pairs_.end() ? empty : it->second;
}

namespace {
std::vector<Term> sorted_terms(const Graph& g, const std::unordered_set<TermId>& ids) {
    std::vector<Term> out;
    out.reserve(ids.size());
    for (TermId id : ids) out.push_back(g.term_of(id));
    std::sort(out.begin(), out.end());
    return out;
}
} // namespace

std::vector<Term> Graph::successors(const Term& role, const Term& node) const {
    TermId r = find_id(role), s = find_id(node);
    if (r == kNoTerm || s == kNoTerm) return {};
    return sorted_terms(*this, successor_ids(r, s));
}

std::vector<Term> Graph::predecessors(const Term& role, const Term& node) const {
    TermId r = find_id(role), o = find_id(node);
    if (r == kNoTerm || o == kNoTerm) return {};
    return sorted_terms(*this, predecessor_ids(r, o));
}

std::vector<Term> Graph::concept_members(const Term& concept_name) const {
    TermId c = find_id(concept_name);
    if (c == kNoTerm) return {};
    return sorted_terms(*this, member_ids(c));
}

std::vector<Term> Graph::concepts_of(const Term& node) const {
    TermId s = find_id(node);
    if (s == kNoTerm) return {};
    return sorted_terms(*this, concept_ids_of(s));
}

std::vector<Term> Graph::nodes() const {
    return sorted_terms(*this, nodes_);
}

bool Graph::is_node(const Term& term) const {
    TermId id = find_id(term);
    return id != kNoTerm && nodes_.count(id) > 0;
}

Assertion Graph::decode(const Encoded& e) const {
    if (e.kind == AssertionKind::Concept)
        return concept_assertion(terms_[e.subject], terms_[e.predicate]);
    return role_assertion(terms_[e.subject], terms_[e.predicate], terms_[e.object]);
}

std::vector<Assertion> Graph::assertions() const {
    std::vector<Assertion> out;
    out.reserve(assertions_.size());
    for (const auto& e : assertions_) out.push_back(decode(e));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace riskman
