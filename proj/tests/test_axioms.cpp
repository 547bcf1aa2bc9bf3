#include "riskman/axioms.hpp"
#include "riskman/dsl.hpp"
#include "riskman/ps.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

using namespace riskman;

namespace {
const Vocabulary vocab;

bool contains_axiom(const Ontology& onto, const Axiom& wanted) {
    return std::find(onto.axioms.begin(), onto.axioms.end(), wanted) != onto.axioms.end();
}
} // namespace

TEST_CASE("builtin ontology carries the definitional axioms") {
    Ontology onto = builtin_riskman_ontology(vocab);

    Axiom sdai = Axiom::gci(
        ConceptExpr::conj({ConceptExpr::cls(vocab.iri_for("SafeDesignArgument")),
                           ConceptExpr::exists(vocab.iri_for("hasImplementationManifest"),
                                               ConceptExpr::top())}),
        ConceptExpr::cls(vocab.iri_for("SDAI")));
    CHECK(contains_axiom(onto, sdai));

    CHECK(contains_axiom(onto, Axiom::range(vocab.iri_for("hasSubSDA"),
                                            vocab.iri_for("SafeDesignArgument"))));
    Axiom sub_sda_domain =
        Axiom::gci(ConceptExpr::exists(vocab.iri_for("hasSubSDA"), ConceptExpr::top()),
                   ConceptExpr::cls(vocab.iri_for("SafeDesignArgument")));
    CHECK(contains_axiom(onto, sub_sda_domain));

    CHECK(contains_axiom(onto, Axiom::role_inclusion({vocab.iri_for("hasAnalyzedRisk"),
                                                      vocab.iri_for("hasHarm")},
                                                     vocab.iri_for("hasHarm"))));
    CHECK(contains_axiom(onto, Axiom::role_inclusion({vocab.iri_for("hasInitialRiskLevel")},
                                                     vocab.iri_for("hasRiskLevel"))));
    CHECK(contains_axiom(onto, Axiom::role_inclusion({vocab.iri_for("hasResidualRiskLevel")},
                                                     vocab.iri_for("hasRiskLevel"))));

    for (const char* role : {"hasParentHazard", "hasParentSituation", "isPartOfDeviceComponent",
                             "hasPrecedingEvent"})
        CHECK(contains_axiom(onto, Axiom::transitive(vocab.iri_for(role))));

    // gt is deliberately untyped
    CHECK_FALSE(contains_axiom(onto, Axiom::range(vocab.iri_for("gt"),
                                                  vocab.iri_for("Probability"))));
    std::size_t range_count = 0;
    for (const auto& a : onto.axioms)
        if (a.kind == Axiom::Kind::Range) ++range_count;
    CHECK(range_count == 27);
}

TEST_CASE("vocabulary name sets are disjoint and cover the builtin axioms") {
    CHECK(vocab.concept_names().size() == 24);
    CHECK(vocab.role_names().size() == 28);
    for (const auto& c : vocab.concept_names()) CHECK_FALSE(vocab.is_role(c));

    Ontology onto = builtin_riskman_ontology(vocab);
    std::function<void(const ConceptExpr&)> check_expr = [&](const ConceptExpr& e) {
        if (e.kind == ConceptExpr::Kind::Name) CHECK(vocab.is_concept(e.name));
        if (e.kind == ConceptExpr::Kind::Exists) CHECK(vocab.is_role(e.role));
        for (const auto& child : e.children) check_expr(child);
    };
    for (const auto& a : onto.axioms) {
        switch (a.kind) {
        case Axiom::Kind::Gci:
            check_expr(a.lhs);
            check_expr(a.rhs);
            break;
        case Axiom::Kind::RoleInclusion:
            for (const auto& r : a.chain) CHECK(vocab.is_role(r));
            CHECK(vocab.is_role(a.super_role));
            break;
        case Axiom::Kind::Range:
            CHECK(vocab.is_role(a.role));
            CHECK(vocab.is_concept(a.range_concept));
            break;
        case Axiom::Kind::Transitive:
            CHECK(vocab.is_role(a.role));
            break;
        case Axiom::Kind::Disjoint:
            CHECK(vocab.is_concept(a.disjoint_pair.first));
            CHECK(vocab.is_concept(a.disjoint_pair.second));
            break;
        }
    }
}

TEST_CASE("every builtin axiom is inside the supported fragment") {
    Ontology onto = builtin_riskman_ontology(vocab);
    for (const auto& axiom : onto.axioms) {
        auto reason = check_fragment(axiom);
        CHECK_MESSAGE(!reason.has_value(), reason.value_or(""));
    }
}

TEST_CASE("disjointness derivation follows the schema rule") {
    Ontology onto = builtin_riskman_ontology(vocab);
    auto pairs = derive_disjointness(onto.hierarchy, vocab.concept_names());

    auto has_pair = [&](const char* a, const char* b) {
        std::string ia = vocab.iri_for(a), ib = vocab.iri_for(b);
        if (ib < ia) std::swap(ia, ib);
        return std::find(pairs.begin(), pairs.end(), std::make_pair(ia, ib)) != pairs.end();
    };

    CHECK(has_pair("Risk", "SafeDesignArgument"));
    CHECK(has_pair("Hazard", "DeviceComponent"));
    CHECK(has_pair("AnalyzedRisk", "ControlledRisk"));
    CHECK(has_pair("RiskSDA", "AssuranceSDA"));

    CHECK_FALSE(has_pair("RiskSDA", "SafeDesignArgument")); // subclass
    CHECK_FALSE(has_pair("SDAI", "RiskSDA"));               // common descendant RiskSDAI
    CHECK_FALSE(has_pair("SDAI", "AssuranceSDA"));          // common descendant AssuranceSDAI
}

TEST_CASE("disjointness equals an independent all-pairs computation") {
    Ontology onto = builtin_riskman_ontology(vocab);
    auto pairs = derive_disjointness(onto.hierarchy, vocab.concept_names());

    // Oracle: boolean reachability matrix over the declared hierarchy.
    std::vector<std::string> names(vocab.concept_names().begin(), vocab.concept_names().end());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
    std::size_t n = names.size();
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) below[i][i] = true;
    for (const auto& [sub, super] : onto.hierarchy) below[index[sub]][index[super]] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (below[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (below[k][j]) below[i][j] = true;

    std::vector<std::pair<std::string, std::string>> expected;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (below[i][j] || below[j][i]) continue;
            bool common = false;
            for (std::size_t d = 0; d < n && !common; ++d) common = below[d][i] && below[d][j];
            if (!common) expected.emplace_back(names[i], names[j]);
        }
    }

    auto norm = [](std::vector<std::pair<std::string, std::string>> v) {
        for (auto& p : v)
            if (p.second < p.first) std::swap(p.first, p.second);
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(norm(pairs) == norm(expected));
}

TEST_CASE("cyclic hierarchies are rejected") {
    std::set<std::string> names = {"http://e.o/A", "http://e.o/B"};
    std::vector<std::pair<std::string, std::string>> cyclic = {
        {"http://e.o/A", "http://e.o/B"}, {"http://e.o/B", "http://e.o/A"}};
    CHECK_THROWS_AS(derive_disjointness(cyclic, names), CyclicHierarchyError);
}

TEST_CASE("check_fragment accepts the supported grammar and rejects the rest") {
    // risk-acceptance-matrix style axiom
    Axiom critical = Axiom::gci(
        ConceptExpr::conj(
            {ConceptExpr::exists(vocab.iri_for("hasProbability"),
                                 ConceptExpr::nominal(probability_magnitude(5))),
             ConceptExpr::exists(vocab.iri_for("hasSeverity"),
                                 ConceptExpr::nominal(severity_magnitude(3)))}),
        ConceptExpr::cls(vocab.iri_for("CriticalRiskLevel")));
    CHECK_FALSE(check_fragment(critical).has_value());

    // rhs existential with a plain concept filler needs fresh individuals
    Axiom fresh = Axiom::gci(ConceptExpr::cls("http://e.o/A"),
                             ConceptExpr::exists("http://e.o/R",
                                                 ConceptExpr::cls("http://e.o/B")));
    CHECK(check_fragment(fresh).has_value());

    CHECK_FALSE(check_fragment(Axiom::range(vocab.iri_for("gt"), vocab.iri_for("Probability")))
                    .has_value());

    // nested existential on the left
    Axiom nested = Axiom::gci(
        ConceptExpr::exists("http://e.o/R",
                            ConceptExpr::exists("http://e.o/S", ConceptExpr::top())),
        ConceptExpr::cls("http://e.o/A"));
    CHECK(check_fragment(nested).has_value());

    // bare nominal conjuncts have no rule encoding
    Axiom bare_nominal = Axiom::gci(ConceptExpr::nominal(probability_magnitude(1)),
                                    ConceptExpr::cls("http://e.o/A"));
    CHECK(check_fragment(bare_nominal).has_value());
}

TEST_CASE("axiom DSL parses the extension examples") {
    DslContext ctx;
    auto axioms = parse_axiom_dsl(
        "; risk acceptance matrix\n"
        "(gci (and (some hasProbability (ind p5)) (some hasSeverity (ind s3)))\n"
        "     (class CriticalRiskLevel))\n",
        ctx);
    REQUIRE(axioms.size() == 1);
    CHECK(axioms[0].kind == Axiom::Kind::Gci);
    CHECK(axioms[0].rhs == ConceptExpr::cls(vocab.iri_for("CriticalRiskLevel")));
    CHECK(ctx.extra_concepts.count(vocab.iri_for("CriticalRiskLevel")) == 1);

    DslContext ctx2;
    auto transitive = parse_axiom_dsl("(transitive hasPrecedingEvent)", ctx2);
    REQUIRE(transitive.size() == 1);
    CHECK(transitive[0] == Axiom::transitive(vocab.iri_for("hasPrecedingEvent")));

    DslContext ctx3;
    CHECK_THROWS_AS(parse_axiom_dsl("(gci (class Hazard) (some hasHarm (class Harm)))", ctx3),
                    ValueError);

    DslContext ctx4;
    CHECK_THROWS_AS(parse_axiom_dsl("(gci (class Hazard)", ctx4), ParseError);

    DslContext ctx5;
    CHECK_THROWS_AS(parse_axiom_dsl("(transitive zz:unknown)", ctx5), UnknownNameError);

    DslContext ctx6;
    auto more = parse_axiom_dsl(
        "(disjoint Hazard Harm)\n"
        "(range causesHarm Harm)\n"
        "(role-incl (chain hasAnalyzedRisk hasHarm) hasHarm)\n",
        ctx6);
    REQUIRE(more.size() == 3);
    CHECK(more[0] == Axiom::disjoint(vocab.iri_for("Hazard"), vocab.iri_for("Harm")));
    CHECK(more[1] == Axiom::range(vocab.iri_for("causesHarm"), vocab.iri_for("Harm")));
    CHECK(more[2].chain.size() == 2);
}

TEST_CASE("runaway nesting is rejected, not a stack overflow") {
    std::string deep;
    for (int i = 0; i < 5000; ++i) deep += "(and (class Hazard) ";
    deep += "top";
    for (int i = 0; i < 5000; ++i) deep += ")";
    DslContext ctx;
    CHECK_THROWS_AS(parse_axiom_dsl("(gci " + deep + " (class Harm))", ctx), ParseError);
}

TEST_CASE("axiom DSL round-trips") {
    Ontology onto = builtin_riskman_ontology(vocab);
    PsOntology ps = generate_ps(PsConfig{3, 3}, vocab, kDefaultNamespace);

    std::vector<Axiom> all = onto.axioms;
    all.insert(all.end(), ps.tbox.begin(), ps.tbox.end());

    DslContext render_ctx;
    std::string text = render_axiom_dsl(all, render_ctx);

    DslContext parse_ctx;
    parse_ctx.require_known_names = false;
    auto reparsed = parse_axiom_dsl(text, parse_ctx);
    CHECK(reparsed == all);
}
