#include "riskman/fixture.hpp"
#include "riskman/parsers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace riskman;

namespace {
const std::string rm = kDefaultNamespace;

std::vector<Triple> sorted(std::vector<Triple> v) {
    std::sort(v.begin(), v.end());
    return v;
}
} // namespace

TEST_CASE("parse_ntriples basics") {
    TripleDoc doc = parse_ntriples(
        "<http://e.o/cr> <" + rm + "isMitigatedBy> <http://e.o/sd0> .\n");
    REQUIRE(doc.triples.size() == 1);
    CHECK(doc.triples[0].subject == iri("http://e.o/cr"));
    CHECK(doc.triples[0].predicate == iri(rm + "isMitigatedBy"));
    CHECK(doc.triples[0].object == iri("http://e.o/sd0"));

    CHECK(parse_ntriples("").triples.empty());
    CHECK(parse_ntriples("# comment only\n\n").triples.empty());

    CHECK_THROWS_AS(parse_ntriples("<http://e.o/a> <http://e.o/p> <http://e.o/b>\n"), ParseError);
    try {
        parse_ntriples("<http://e.o/a> <http://e.o/p> <http://e.o/b>\n<x> <y> <z> .");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
    }
}

TEST_CASE("parse_ntriples literals and blanks") {
    TripleDoc doc = parse_ntriples(
        "_:b0 <http://e.o/p> \"hi\\nthere\" .\n"
        "<http://e.o/a> <http://e.o/q> \"42\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
        "<http://e.o/a> <http://e.o/r> \"chat\"@en .\n");
    REQUIRE(doc.triples.size() == 3);
    CHECK(doc.triples[0].subject == blank("b0"));
    CHECK(doc.triples[0].object == literal("hi\nthere"));
    CHECK(doc.triples[1].object == literal("42", "http://www.w3.org/2001/XMLSchema#integer"));
    CHECK(doc.triples[2].object == literal("chat", {}, "en"));
}

TEST_CASE("turtle subset: directives, 'a', lists") {
    TripleDoc doc = parse_turtle_subset(
        "@prefix rm: <" + rm + "> .\n"
        "@prefix ex: <http://e.o/> .\n"
        "ex:cr a rm:ControlledRisk .\n");
    REQUIRE(doc.triples.size() == 1);
    CHECK(doc.triples[0] == Triple{iri("http://e.o/cr"), iri(rdf::type),
                                   iri(rm + "ControlledRisk")});

    TripleDoc lists = parse_turtle_subset(
        "@prefix rm: <" + rm + "> .\n"
        "@prefix ex: <http://e.o/> .\n"
        "ex:sd0 rm:hasSubSDA ex:sd1 , ex:sd2 , ex:sd3 .\n");
    CHECK(lists.triples.size() == 3);

    TripleDoc semis = parse_turtle_subset(
        "@prefix ex: <http://e.o/> .\n"
        "ex:a ex:p ex:b ; ex:q ex:c ; ex:r \"lit\" .\n");
    CHECK(semis.triples.size() == 3);
}

TEST_CASE("turtle subset rejects excluded features") {
    std::string prelude = "@prefix rm: <" + rm + "> .\n@prefix ex: <http://e.o/> .\n";
    CHECK_THROWS_AS(parse_turtle_subset(prelude + "ex:x ex:p [ rm:hasHarm ex:hr ] .\n"),
                    UnsupportedConstructError);
    CHECK_THROWS_AS(parse_turtle_subset(prelude + "ex:x ex:p ( ex:a ex:b ) .\n"),
                    UnsupportedConstructError);
    CHECK_THROWS_AS(parse_turtle_subset(prelude + "ex:x ex:p 42 .\n"), UnsupportedConstructError);
    CHECK_THROWS_AS(parse_turtle_subset("ex:x ex:p ex:y .\n"), UnknownNameError); // no prefix decl
    CHECK_THROWS_AS(parse_turtle_subset(prelude + "ex:x ex:p ex:y \n"), ParseError);
}

TEST_CASE("turtle errors carry their position") {
    try {
        parse_turtle_subset("@prefix ex: <http://e.o/> .\nex:a ex:p ex:b .\nex:c ex:q [ ] .\n");
        FAIL("expected an unsupported-construct error");
    } catch (const UnsupportedConstructError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("turtle base resolution") {
    TripleDoc doc = parse_turtle_subset(
        "@base <http://e.o/> .\n@prefix ex: <http://e.o/> .\n<cr> ex:p <sd0> .\n");
    REQUIRE(doc.triples.size() == 1);
    CHECK(doc.triples[0].subject == iri("http://e.o/cr"));
    CHECK(doc.triples[0].object == iri("http://e.o/sd0"));

    CHECK_THROWS_AS(parse_turtle_subset("<cr> <http://e.o/p> <http://e.o/x> .\n"), ParseError);
}

TEST_CASE("rdfa distiller: typeof and property rules") {
    std::string html =
        "<html prefix=\"rm: " + rm + " ex: http://e.o/\"><body>"
        "<div about=\"ex:cr\" typeof=\"rm:ControlledRisk\">"
        "<span property=\"rm:isMitigatedBy\" resource=\"ex:sd0\"></span>"
        "</div></body></html>";
    TripleDoc doc = distill_rdfa_subset(html, "http://e.o/doc#");
    REQUIRE(doc.triples.size() == 2);
    CHECK(doc.triples[0] ==
          Triple{iri("http://e.o/cr"), iri(rdf::type), iri(rm + "ControlledRisk")});
    CHECK(doc.triples[1] ==
          Triple{iri("http://e.o/cr"), iri(rm + "isMitigatedBy"), iri("http://e.o/sd0")});
}

TEST_CASE("rdfa distiller: text content becomes a literal") {
    std::string html =
        "<html prefix=\"rm: " + rm + " ex: http://e.o/\"><body>"
        "<div about=\"ex:dp\"><span property=\"rm:comment\">Defective Alarm "
        "(IMDRF A160106)</span></div></body></html>";
    TripleDoc doc = distill_rdfa_subset(html, "http://e.o/doc#");
    REQUIRE(doc.triples.size() == 1);
    CHECK(doc.triples[0].object == literal("Defective Alarm (IMDRF A160106)"));

    Vocabulary vocab;
    AboxResult mapped = triples_to_abox(doc, vocab);
    CHECK(mapped.graph.size() == 0);
    CHECK(mapped.graph.literal_triples().size() == 1);
    CHECK(mapped.leftover.empty());
}

TEST_CASE("rdfa distiller: nearest-ancestor subject and unknown prefix") {
    std::string html =
        "<html prefix=\"rm: " + rm + " ex: http://e.o/\"><body>"
        "<div about=\"ex:outer\"><p><span property=\"rm:hasHarm\" resource=\"ex:hr\"></span>"
        "</p></div></body></html>";
    TripleDoc doc = distill_rdfa_subset(html, "http://e.o/doc#");
    REQUIRE(doc.triples.size() == 1);
    CHECK(doc.triples[0].subject == iri("http://e.o/outer"));

    CHECK_THROWS_AS(distill_rdfa_subset("<div about=\"nope:x\" typeof=\"nope:T\"></div>",
                                        "http://e.o/doc#"),
                    UnknownNameError);
}

TEST_CASE("triples_to_abox mapping and type misuse") {
    Vocabulary vocab;
    std::string ttl =
        "@prefix rm: <" + rm + "> .\n@prefix ex: <http://e.o/> .\n"
        "ex:cr a rm:ControlledRisk .\n"
        "ex:irl rm:hasProbability1 rm:p5 .\n"
        "ex:x ex:unknownPred ex:y .\n"
        "ex:x a ex:UnknownClass .\n";
    AboxResult mapped = triples_to_abox(parse_turtle_subset(ttl), vocab);
    CHECK(mapped.graph.size() == 2);
    CHECK(mapped.graph.has_concept(iri("http://e.o/cr"), vocab.concept_term("ControlledRisk")));
    CHECK(mapped.graph.has_role(iri("http://e.o/irl"), vocab.role_term("hasProbability1"),
                                iri(rm + "p5")));
    CHECK(mapped.leftover.size() == 2);

    // role used as a class
    CHECK_THROWS_AS(triples_to_abox(parse_turtle_subset("@prefix rm: <" + rm +
                                                        "> .\n@prefix ex: <http://e.o/> .\n"
                                                        "ex:x a rm:hasHarm .\n"),
                                    vocab),
                    TypeMisuseError);
    // concept used as a predicate
    CHECK_THROWS_AS(triples_to_abox(parse_turtle_subset("@prefix rm: <" + rm +
                                                        "> .\n@prefix ex: <http://e.o/> .\n"
                                                        "ex:x rm:Hazard ex:y .\n"),
                                    vocab),
                    TypeMisuseError);
}

TEST_CASE("escapes and entities decode") {
    TripleDoc nt = parse_ntriples("<http://e.o/a> <http://e.o/p> \"\\u00e9t\\u00e9\" .\n");
    CHECK(nt.triples[0].object == literal("\xc3\xa9t\xc3\xa9"));

    std::string html = "<div prefix=\"ex: http://e.o/\" about=\"ex:a\">"
                       "<span property=\"ex:p\">A &amp; B &lt;tag&gt; &#233;</span></div>";
    TripleDoc rdfa = distill_rdfa_subset(html, "http://e.o/doc#");
    REQUIRE(rdfa.triples.size() == 1);
    CHECK(rdfa.triples[0].object == literal("A & B <tag> \xc3\xa9"));
}

TEST_CASE("rdfa href fallback and multiple typeof tokens") {
    std::string html =
        "<div prefix=\"rm: " + rm + " ex: http://e.o/\" about=\"ex:a\" "
        "typeof=\"rm:Hazard rm:DeviceProblem\">"
        "<a property=\"ex:link\" href=\"ex:b\">b</a>"
        "<img property=\"ex:empty\">"
        "</div>";
    TripleDoc doc = distill_rdfa_subset(html, "http://e.o/doc#");
    REQUIRE(doc.triples.size() == 4);
    CHECK(doc.triples[0].object == iri(rm + "Hazard"));
    CHECK(doc.triples[1].object == iri(rm + "DeviceProblem"));
    CHECK(doc.triples[2].object == iri("http://e.o/b"));
    CHECK(doc.triples[3].object == literal("")); // void element, no text
}

TEST_CASE("prefix map is seeded after parsing any format") {
    for (const TripleDoc& doc :
         {parse_ntriples(""), parse_turtle_subset(""), distill_rdfa_subset("<p></p>", "http://e.o/d#")}) {
        CHECK(doc.prefix_map.has("rdf"));
        CHECK(doc.prefix_map.expand("rm") == kDefaultNamespace);
    }
}

TEST_CASE("unsupported rdfa attributes are warned about, not errors") {
    std::string html =
        "<div prefix=\"ex: http://e.o/\" about=\"ex:a\" vocab=\"http://e.o/\">"
        "<span property=\"ex:p\" content=\"ignored\" resource=\"ex:b\"></span></div>";
    TripleDoc doc = distill_rdfa_subset(html, "http://e.o/doc#");
    CHECK(doc.triples.size() == 1);
    CHECK(doc.warnings.size() == 2); // vocab= and content=
}

TEST_CASE("format detection") {
    CHECK(detect_format("a.nt") == InputFormat::NTriples);
    CHECK(detect_format("a.ttl") == InputFormat::Turtle);
    CHECK(detect_format("a.turtle") == InputFormat::Turtle);
    CHECK(detect_format("a.html") == InputFormat::RdfaHtml);
    CHECK(detect_format("a.htm") == InputFormat::RdfaHtml);
    CHECK_THROWS_AS(detect_format("a.rdf"), ValueError);
}

TEST_CASE("graph round-trips through N-Triples") {
    Vocabulary vocab;
    std::mt19937 rng(31337);
    std::vector<std::string> roles(vocab.role_names().begin(), vocab.role_names().end());
    std::vector<std::string> concepts(vocab.concept_names().begin(), vocab.concept_names().end());

    for (int round = 0; round < 40; ++round) {
        Graph g;
        std::uniform_int_distribution<int> count(0, 60);
        std::uniform_int_distribution<std::size_t> role_pick(0, roles.size() - 1);
        std::uniform_int_distribution<std::size_t> concept_pick(0, concepts.size() - 1);
        std::uniform_int_distribution<int> node_pick(0, 14);
        auto node = [&]() { return iri("http://e.o/n" + std::to_string(node_pick(rng))); };
        int n = count(rng);
        for (int i = 0; i < n; ++i) {
            if (i % 3 == 0) g.add(concept_assertion(node(), iri(concepts[concept_pick(rng)])));
            else g.add(role_assertion(node(), iri(roles[role_pick(rng)]), node()));
        }
        g.add_literal_triple(node(), iri(rm + "comment"), literal("note \"quoted\"\twith tab"));

        std::string nt = graph_to_ntriples(g);
        AboxResult back = triples_to_abox(parse_ntriples(nt), vocab);
        CHECK(back.leftover.empty());
        CHECK(back.graph.assertions() == g.assertions());
        CHECK(back.graph.literal_triples().size() == g.literal_triples().size());
    }
}

TEST_CASE("turtle and ntriples agree on equivalent documents") {
    std::mt19937 rng(4242);
    Vocabulary vocab;
    std::vector<std::string> roles(vocab.role_names().begin(), vocab.role_names().end());

    for (int round = 0; round < 30; ++round) {
        std::uniform_int_distribution<int> count(1, 25);
        std::uniform_int_distribution<std::size_t> role_pick(0, roles.size() - 1);
        std::uniform_int_distribution<int> node_pick(0, 9);
        std::vector<Triple> triples;
        int n = count(rng);
        for (int i = 0; i < n; ++i) {
            triples.push_back({iri("http://e.o/n" + std::to_string(node_pick(rng))),
                               iri(roles[role_pick(rng)]),
                               iri("http://e.o/n" + std::to_string(node_pick(rng)))});
        }

        std::string nt = serialize_ntriples(triples);
        std::string ttl = "@prefix rm: <" + rm + "> .\n@prefix ex: <http://e.o/> .\n";
        for (const auto& t : triples) {
            ttl += "ex:" + local_name(t.subject) + " rm:" + local_name(t.predicate) + " ex:" +
                   local_name(t.object) + " .\n";
        }

        CHECK(sorted(parse_ntriples(nt).triples) == sorted(parse_turtle_subset(ttl).triples));
    }
}

TEST_CASE("fixture HTML distills to the fixture turtle assertion set") {
    TripleDoc from_html = distill_rdfa_subset(fixture_html(), "https://example.org/infusion-pump#");
    TripleDoc from_ttl = parse_turtle_subset(fixture_turtle());
    CHECK(sorted(from_html.triples) == sorted(from_ttl.triples));

    Vocabulary vocab;
    AboxResult a = triples_to_abox(from_html, vocab);
    AboxResult b = triples_to_abox(from_ttl, vocab);
    CHECK(a.graph.assertions() == b.graph.assertions());
    CHECK(a.leftover.empty());
    CHECK(b.leftover.empty());
}
