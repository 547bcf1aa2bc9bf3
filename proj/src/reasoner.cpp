#include "riskman/reasoner.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace riskman {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Graph copy_graph(const Graph& input) {
    Graph g;
    for (const auto& e : input.encoded()) {
        if (e.kind == AssertionKind::Concept)
            g.add_concept(input.term_of(e.subject), input.term_of(e.predicate));
        else
            g.add_role(input.term_of(e.subject), input.term_of(e.predicate),
                       input.term_of(e.object));
    }
    for (const auto& t : input.literal_triples()) g.add_literal_triple(t[0], t[1], t[2]);
    return g;
}

// Rule with all names resolved to term ids of the working graph.
struct CompiledCondition {
    RuleCondition::Kind kind;
    TermId predicate = kNoTerm; // concept or role id
    int subject_var = 0;
    int object_var = -1;
    TermId constant = kNoTerm;
    bool object_unused = false; // object var occurs nowhere else: existence test
};

struct CompiledRule {
    const Rule* source = nullptr;
    std::vector<CompiledCondition> body;
    RuleHead::Kind head_kind;
    TermId head_predicate = kNoTerm;
    int head_subject_var = 0;
    int head_object_var = -1;
    TermId head_constant = kNoTerm;
};

std::vector<CompiledRule> resolve_rules(Graph& g, const std::vector<Rule>& rules) {
    std::vector<CompiledRule> out;
    out.reserve(rules.size());
    for (const auto& rule : rules) {
        CompiledRule cr;
        cr.source = &rule;

        std::vector<int> var_uses(static_cast<std::size_t>(rule.var_count), 0);
        auto use = [&](int v) {
            if (v >= 0) ++var_uses[static_cast<std::size_t>(v)];
        };
        for (const auto& c : rule.body) {
            use(c.subject_var);
            if (c.kind == RuleCondition::Kind::RoleEdge) use(c.object_var);
        }
        use(rule.head.subject_var);
        if (rule.head.kind == RuleHead::Kind::AddRole) use(rule.head.object_var);

        for (const auto& c : rule.body) {
            CompiledCondition cc;
            cc.kind = c.kind;
            cc.subject_var = c.subject_var;
            switch (c.kind) {
            case RuleCondition::Kind::ConceptMember:
                cc.predicate = g.intern(iri(c.concept_name));
                break;
            case RuleCondition::Kind::RoleEdge:
                cc.predicate = g.intern(iri(c.role));
                cc.object_var = c.object_var;
                cc.object_unused = var_uses[static_cast<std::size_t>(c.object_var)] == 1;
                break;
            case RuleCondition::Kind::RoleEdgeToConstant:
                cc.predicate = g.intern(iri(c.role));
                cc.constant = g.intern(c.constant);
                break;
            }
            cr.body.push_back(cc);
        }

        cr.head_kind = rule.head.kind;
        cr.head_subject_var = rule.head.subject_var;
        switch (rule.head.kind) {
        case RuleHead::Kind::AddConcept:
            cr.head_predicate = g.intern(iri(rule.head.concept_name));
            break;
        case RuleHead::Kind::AddRole:
            cr.head_predicate = g.intern(iri(rule.head.role));
            cr.head_object_var = rule.head.object_var;
            break;
        case RuleHead::Kind::AddRoleToConstant:
            cr.head_predicate = g.intern(iri(rule.head.role));
            cr.head_constant = g.intern(rule.head.constant);
            break;
        case RuleHead::Kind::Clash:
            break;
        }
        out.push_back(std::move(cr));
    }
    return out;
}

constexpr TermId kUnbound = kNoTerm;

// Does the already-bound part of `binding` admit this assertion at this
// condition? On success the binding is extended in place.
bool try_bind(const CompiledCondition& cond, const Graph::Encoded& a,
              std::vector<TermId>& binding) {
    if (cond.kind == RuleCondition::Kind::ConceptMember) {
        if (a.kind != AssertionKind::Concept || a.predicate != cond.predicate) return false;
        TermId& slot = binding[static_cast<std::size_t>(cond.subject_var)];
        if (slot != kUnbound && slot != a.subject) return false;
        slot = a.subject;
        return true;
    }
    if (a.kind != AssertionKind::Role || a.predicate != cond.predicate) return false;
    if (cond.kind == RuleCondition::Kind::RoleEdgeToConstant) {
        if (a.object != cond.constant) return false;
        TermId& slot = binding[static_cast<std::size_t>(cond.subject_var)];
        if (slot != kUnbound && slot != a.subject) return false;
        slot = a.subject;
        return true;
    }
    if (cond.subject_var == cond.object_var && a.subject != a.object) return false;
    TermId& s = binding[static_cast<std::size_t>(cond.subject_var)];
    if (s != kUnbound && s != a.subject) return false;
    TermId& o = binding[static_cast<std::size_t>(cond.object_var)];
    if (o != kUnbound && o != a.object) return false;
    s = a.subject;
    o = a.object;
    return true;
}

// Joins the remaining conditions against the full graph via its indexes,
// invoking sink once per complete binding.
template <typename Sink>
void join_rest(const Graph& g, const CompiledRule& rule, std::size_t skip_index,
               std::size_t next_index, std::vector<TermId>& binding, Sink&& sink) {
    if (next_index == rule.body.size()) {
        sink(binding);
        return;
    }
    if (next_index == skip_index) {
        join_rest(g, rule, skip_index, next_index + 1, binding, sink);
        return;
    }
    const CompiledCondition& cond = rule.body[next_index];
    auto subj_slot = static_cast<std::size_t>(cond.subject_var);

    switch (cond.kind) {
    case RuleCondition::Kind::ConceptMember: {
        TermId s = binding[subj_slot];
        if (s != kUnbound) {
            if (g.has_concept_ids(cond.predicate, s))
                join_rest(g, rule, skip_index, next_index + 1, binding, sink);
        } else {
            for (TermId member : g.member_ids(cond.predicate)) {
                binding[subj_slot] = member;
                join_rest(g, rule, skip_index, next_index + 1, binding, sink);
            }
            binding[subj_slot] = kUnbound;
        }
        return;
    }
    case RuleCondition::Kind::RoleEdgeToConstant: {
        TermId s = binding[subj_slot];
        if (s != kUnbound) {
            if (g.has_role_ids(cond.predicate, s, cond.constant))
                join_rest(g, rule, skip_index, next_index + 1, binding, sink);
        } else {
            for (TermId subj : g.predecessor_ids(cond.predicate, cond.constant)) {
                binding[subj_slot] = subj;
                join_rest(g, rule, skip_index, next_index + 1, binding, sink);
            }
            binding[subj_slot] = kUnbound;
        }
        return;
    }
    case RuleCondition::Kind::RoleEdge: {
        auto obj_slot = static_cast<std::size_t>(cond.object_var);
        TermId s = binding[subj_slot];
        TermId o = binding[obj_slot];
        if (s != kUnbound && o != kUnbound) {
            if (g.has_role_ids(cond.predicate, s, o))
                join_rest(g, rule, skip_index, next_index + 1, binding, sink);
        } else if (s != kUnbound) {
            const auto& succ = g.successor_ids(cond.predicate, s);
            if (cond.object_unused) {
                if (!succ.empty())
                    join_rest(g, rule, skip_index, next_index + 1, binding, sink);
            } else {
                for (TermId obj : succ) {
                    binding[obj_slot] = obj;
                    join_rest(g, rule, skip_index, next_index + 1, binding, sink);
                }
                binding[obj_slot] = kUnbound;
            }
        } else if (o != kUnbound) {
            for (TermId subj : g.predecessor_ids(cond.predicate, o)) {
                binding[subj_slot] = subj;
                join_rest(g, rule, skip_index, next_index + 1, binding, sink);
            }
            binding[subj_slot] = kUnbound;
        } else {
            for (const auto& [subj, obj] : g.role_pairs(cond.predicate)) {
                binding[subj_slot] = subj;
                binding[obj_slot] = obj;
                join_rest(g, rule, skip_index, next_index + 1, binding, sink);
            }
            binding[subj_slot] = kUnbound;
            binding[obj_slot] = kUnbound;
        }
        return;
    }
    }
}

} // namespace

MaterializeResult materialize(const Graph& input, const std::vector<Rule>& rules,
                              const ResourceLimits& limits) {
    auto start = Clock::now();
    MaterializeResult result;
    Graph g = copy_graph(input);
    std::vector<CompiledRule> compiled = resolve_rules(g, rules);

    result.stats.input_assertions = g.size();

    std::set<std::tuple<TermId, std::string, std::string>> clash_seen;

    auto check_limits = [&]() {
        if (g.size() > limits.max_assertions)
            throw ResourceLimitError("resource-limit: assertion budget of " +
                                     std::to_string(limits.max_assertions) + " exceeded");
        if (seconds_since(start) > limits.max_seconds)
            throw ResourceLimitError("resource-limit: time budget of " +
                                     std::to_string(limits.max_seconds) + " s exceeded");
    };

    // Pivot index: which (rule, body position) pairs can consume an
    // assertion with a given predicate id.
    struct Pivot {
        const CompiledRule* rule;
        std::size_t position;
    };
    std::unordered_map<std::uint64_t, std::vector<Pivot>> pivots;
    std::vector<const CompiledRule*> unconditional;
    auto pivot_key = [](AssertionKind kind, TermId predicate) {
        return (static_cast<std::uint64_t>(kind == AssertionKind::Concept ? 1 : 2) << 32) |
               predicate;
    };
    for (const auto& rule : compiled) {
        if (rule.body.empty()) {
            unconditional.push_back(&rule);
            continue;
        }
        for (std::size_t k = 0; k < rule.body.size(); ++k) {
            AssertionKind kind = rule.body[k].kind == RuleCondition::Kind::ConceptMember
                                     ? AssertionKind::Concept
                                     : AssertionKind::Role;
            pivots[pivot_key(kind, rule.body[k].predicate)].push_back({&rule, k});
        }
    }

    std::vector<Graph::Encoded> delta(g.encoded().begin(), g.encoded().end());
    std::vector<Graph::Encoded> next_delta;

    // Matches found in an iteration are applied only after the whole
    // iteration: joins always run against the stable closure of the previous
    // round, and each iteration contributes one merged delta set.
    std::vector<std::pair<Graph::Encoded, const CompiledRule*>> pending;

    while (!delta.empty()) {
        ++result.stats.iterations;
        check_limits();
        next_delta.clear();
        pending.clear();

        auto fire = [&](const CompiledRule& rule, const std::vector<TermId>& binding) {
            switch (rule.head_kind) {
            case RuleHead::Kind::AddConcept: {
                TermId subj = binding[static_cast<std::size_t>(rule.head_subject_var)];
                if (!g.has_concept_ids(rule.head_predicate, subj))
                    pending.push_back(
                        {{AssertionKind::Concept, rule.head_predicate, subj, kNoTerm}, &rule});
                break;
            }
            case RuleHead::Kind::AddRole: {
                TermId subj = binding[static_cast<std::size_t>(rule.head_subject_var)];
                TermId obj = binding[static_cast<std::size_t>(rule.head_object_var)];
                if (!g.has_role_ids(rule.head_predicate, subj, obj))
                    pending.push_back({{AssertionKind::Role, rule.head_predicate, subj, obj}, &rule});
                break;
            }
            case RuleHead::Kind::AddRoleToConstant: {
                TermId subj = binding[static_cast<std::size_t>(rule.head_subject_var)];
                if (!g.has_role_ids(rule.head_predicate, subj, rule.head_constant))
                    pending.push_back(
                        {{AssertionKind::Role, rule.head_predicate, subj, rule.head_constant},
                         &rule});
                break;
            }
            case RuleHead::Kind::Clash: {
                TermId subj = binding[static_cast<std::size_t>(rule.head_subject_var)];
                if (clash_seen.emplace(subj, rule.source->head.clash_a, rule.source->head.clash_b)
                        .second)
                    result.clashes.push_back({g.term_of(subj), rule.source->head.clash_a,
                                              rule.source->head.clash_b, rule.source->id});
                break;
            }
            }
            if ((pending.size() & 0xFFF) == 0xFFF) check_limits();
        };

        // Unconstrained heads (top on the left) apply to every node; re-run
        // each iteration so nodes introduced by nominal heads are covered.
        // Duplicate adds are no-ops.
        for (const CompiledRule* rule : unconditional) {
            std::vector<TermId> binding(static_cast<std::size_t>(rule->source->var_count),
                                        kUnbound);
            std::vector<TermId> node_ids(g.node_ids().begin(), g.node_ids().end());
            std::sort(node_ids.begin(), node_ids.end());
            for (TermId n : node_ids) {
                binding[0] = n;
                fire(*rule, binding);
            }
        }

        std::vector<TermId> binding;
        for (const auto& d : delta) {
            auto it = pivots.find(pivot_key(d.kind, d.predicate));
            if (it == pivots.end()) continue;
            for (const Pivot& pivot : it->second) {
                const CompiledRule& rule = *pivot.rule;
                binding.assign(static_cast<std::size_t>(rule.source->var_count), kUnbound);
                if (!try_bind(rule.body[pivot.position], d, binding)) continue;
                join_rest(g, rule, pivot.position, 0, binding,
                          [&](const std::vector<TermId>& b) { fire(rule, b); });
            }
        }

        for (const auto& [assertion, rule] : pending) {
            bool added = assertion.kind == AssertionKind::Concept
                             ? g.add_concept_ids(assertion.predicate, assertion.subject)
                             : g.add_role_ids(assertion.predicate, assertion.subject,
                                              assertion.object);
            if (added) {
                next_delta.push_back(assertion);
                result.derivations.push_back({assertion, rule->source->id});
            }
        }
        check_limits();
        std::swap(delta, next_delta);
    }

    result.stats.derived_assertions = g.size() - result.stats.input_assertions;
    result.stats.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    std::sort(result.clashes.begin(), result.clashes.end());
    g.freeze();
    result.closure = std::move(g);
    return result;
}

Graph naive_materialize(const Graph& input, const std::vector<Rule>& rules,
                        const ResourceLimits& limits) {
    auto start = Clock::now();
    Graph g = copy_graph(input);
    std::vector<CompiledRule> compiled = resolve_rules(g, rules);

    bool changed = true;
    while (changed) {
        changed = false;
        if (g.size() > limits.max_assertions)
            throw ResourceLimitError("resource-limit: assertion budget exceeded");
        if (seconds_since(start) > limits.max_seconds)
            throw ResourceLimitError("resource-limit: time budget exceeded");

        for (const auto& rule : compiled) {
            // Pure scan-based enumeration over a snapshot of the assertion
            // list; no index lookups, no deltas.
            const std::vector<Graph::Encoded> snapshot(g.encoded().begin(), g.encoded().end());
            if (rule.body.empty()) {
                std::vector<TermId> node_ids(g.node_ids().begin(), g.node_ids().end());
                std::sort(node_ids.begin(), node_ids.end());
                for (TermId n : node_ids) {
                    if (rule.head_kind == RuleHead::Kind::AddConcept)
                        changed |= g.add_concept_ids(rule.head_predicate, n);
                    else if (rule.head_kind == RuleHead::Kind::AddRoleToConstant)
                        changed |= g.add_role_ids(rule.head_predicate, n, rule.head_constant);
                }
                continue;
            }
            std::vector<std::vector<TermId>> matches;
            std::vector<TermId> binding(static_cast<std::size_t>(rule.source->var_count), kUnbound);

            auto enumerate = [&](auto&& self, std::size_t index) -> void {
                if (index == rule.body.size()) {
                    matches.push_back(binding);
                    return;
                }
                const CompiledCondition& cond = rule.body[index];
                for (const auto& a : snapshot) {
                    std::vector<TermId> saved = binding;
                    if (try_bind(cond, a, binding)) self(self, index + 1);
                    binding = std::move(saved);
                }
            };
            enumerate(enumerate, 0);

            for (const auto& m : matches) {
                switch (rule.head_kind) {
                case RuleHead::Kind::AddConcept:
                    changed |= g.add_concept_ids(
                        rule.head_predicate, m[static_cast<std::size_t>(rule.head_subject_var)]);
                    break;
                case RuleHead::Kind::AddRole:
                    changed |= g.add_role_ids(rule.head_predicate,
                                              m[static_cast<std::size_t>(rule.head_subject_var)],
                                              m[static_cast<std::size_t>(rule.head_object_var)]);
                    break;
                case RuleHead::Kind::AddRoleToConstant:
                    changed |= g.add_role_ids(rule.head_predicate,
                                              m[static_cast<std::size_t>(rule.head_subject_var)],
                                              rule.head_constant);
                    break;
                case RuleHead::Kind::Clash:
                    break; // consistency is re-derived from the closure
                }
            }
        }
    }
    g.freeze();
    return g;
}

std::vector<ClashRecord>
check_consistency(const Graph& closure,
                  const std::vector<std::pair<std::string, std::string>>& disjoint_pairs) {
    std::vector<ClashRecord> out;
    for (const auto& [a, b] : disjoint_pairs) {
        TermId ca = closure.find_id(iri(a));
        TermId cb = closure.find_id(iri(b));
        if (ca == kNoTerm || cb == kNoTerm) continue;
        const auto& members_a = closure.member_ids(ca);
        const auto& members_b = closure.member_ids(cb);
        const auto& smaller = members_a.size() <= members_b.size() ? members_a : members_b;
        const auto& larger = members_a.size() <= members_b.size() ? members_b : members_a;
        for (TermId m : smaller)
            if (larger.count(m))
                out.push_back({closure.term_of(m), std::min(a, b), std::max(a, b), "consistency"});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace riskman
