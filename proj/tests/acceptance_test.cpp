// Acceptance suite: the pinned exit criteria for the validator, one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include "riskman/pipeline.hpp"
#include "shape_oracle.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sys/resource.h>

using namespace riskman;
using namespace riskman::testing;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("criterion %d %-34s %s%s%s\n", number, name.c_str(), ok ? "PASS" : "FAIL",
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok) ++g_failures;
}

const Vocabulary vocab;

Term ex(const char* local) { return iri(kFixtureNamespace + std::string(local)); }

double run_seconds(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criterion 1: exact closure delta --------------------------------------

void criterion_closure() {
    FixtureSetup setup = make_fixture_setup();
    FixtureData fx = fixture_infusion_pump();

    MaterializeResult mat;
    double seconds = run_seconds([&] { mat = materialize(setup.input, setup.rules); });

    std::vector<Assertion> actual = delta_over(mat.closure, setup.input, fx.submission.nodes());
    std::vector<Assertion> expected = fx.expected_closure_delta;
    std::sort(expected.begin(), expected.end());

    bool exact = actual == expected;
    bool fast = seconds < 1.0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "%zu expected, %zu derived over fixture nodes, %.3f s",
                  expected.size(), actual.size(), seconds);
    report(1, "fixture closure reproduction", exact && fast && mat.clashes.empty(), detail);
}

// --- criterion 2: the multiplication example --------------------------------

void criterion_multiplication() {
    bool value_ok = multiply_magnitudes(3, 4, 5) == 2;

    PsOntology ps = generate_ps(PsConfig{5, 5}, vocab, kDefaultNamespace);
    Axiom expected = Axiom::gci(
        ConceptExpr::conj({ConceptExpr::exists(vocab.iri_for("hasProbability1"),
                                               ConceptExpr::nominal(probability_magnitude(3))),
                           ConceptExpr::exists(vocab.iri_for("hasProbability2"),
                                               ConceptExpr::nominal(probability_magnitude(4)))}),
        ConceptExpr::exists(vocab.iri_for("hasProbability"),
                            ConceptExpr::nominal(probability_magnitude(2))));
    bool axiom_ok = std::find(ps.tbox.begin(), ps.tbox.end(), expected) != ps.tbox.end();

    report(2, "scale multiplication example", value_ok && axiom_ok);
}

// --- criterion 3: clean fixture validation ----------------------------------

void criterion_fixture_validation() {
    PipelineConfig config;
    PipelineResult result = run_validate_texts(
        config, {{"pump.ttl", fixture_turtle(), InputFormat::Turtle}});
    bool ok = result.exit_code == 0 && result.report.conforms && !result.report.inconsistent &&
              result.report.violations.empty() && result.report.clashes.empty();
    report(3, "fixture validates conforming", ok);
}

// --- criterion 4: mutation suite ---------------------------------------------

struct Mutation {
    std::string name;
    std::function<Graph(const FixtureSetup&)> apply;
    std::vector<std::pair<std::string, Term>> expected_violations; // (constraint id, focus)
    std::vector<Term> expected_clashes;
    int expected_exit;
};

std::vector<Mutation> mutation_table() {
    auto role = [](const char* local) { return Vocabulary{}.role_term(local); };
    auto cls = [](const char* local) { return Vocabulary{}.concept_term(local); };
    std::vector<Mutation> table;

    table.push_back({"second harm on the analyzed risk",
                     [&](const FixtureSetup& s) {
                         return with_extra(s.input, {role_assertion(ex("ar"), role("hasHarm"),
                                                                    ex("hr2"))});
                     },
                     {{"C1", ex("ar")}},
                     {},
                     1});
    table.push_back({"assurance SDA without safety assurance",
                     [&](const FixtureSetup& s) {
                         Graph g = without(s.input, {role_assertion(ex("sd5"),
                                                                    role("hasSafetyAssurance"),
                                                                    ex("sa"))});
                         g.add(concept_assertion(ex("sd5"), cls("AssuranceSDA")));
                         return g;
                     },
                     {{"C2", ex("sd5")}},
                     {},
                     1});
    table.push_back({"second mitigation on the controlled risk",
                     [&](const FixtureSetup& s) {
                         return with_extra(
                             s.input,
                             {role_assertion(ex("cr"), role("isMitigatedBy"), ex("sd6")),
                              role_assertion(ex("sd6"), role("hasImplementationManifest"),
                                             ex("im6"))});
                     },
                     {{"C3", ex("cr")}},
                     {},
                     1});
    table.push_back({"residual probability raised to p5",
                     [&](const FixtureSetup& s) {
                         Graph g = without(s.input, {role_assertion(ex("rrl"),
                                                                    role("hasProbability"),
                                                                    probability_magnitude(3))});
                         g.add(role_assertion(ex("rrl"), role("hasProbability"),
                                              probability_magnitude(5)));
                         return g;
                     },
                     {{"C4.hasProbability", ex("cr")}},
                     {},
                     1});
    table.push_back({"residual P1 exceeds the initial P1",
                     [&](const FixtureSetup& s) {
                         Graph g = without(s.input, {role_assertion(ex("irl"),
                                                                    role("hasProbability1"),
                                                                    probability_magnitude(5))});
                         g.add(role_assertion(ex("irl"), role("hasProbability1"),
                                              probability_magnitude(4)));
                         g.add(role_assertion(ex("rrl"), role("hasProbability1"),
                                              probability_magnitude(5)));
                         return g;
                     },
                     {{"C4.hasProbability1", ex("cr")}},
                     {},
                     1});
    table.push_back({"residual P2 exceeds the initial P2",
                     [&](const FixtureSetup& s) {
                         return with_extra(s.input,
                                           {role_assertion(ex("rrl"), role("hasProbability2"),
                                                           probability_magnitude(5))});
                     },
                     {{"C4.hasProbability2", ex("cr")}},
                     {},
                     1});
    table.push_back({"residual severity raised to s5",
                     [&](const FixtureSetup& s) {
                         Graph g = without(s.input, {role_assertion(ex("rrl"), role("hasSeverity"),
                                                                    severity_magnitude(4))});
                         g.add(role_assertion(ex("rrl"), role("hasSeverity"),
                                              severity_magnitude(5)));
                         return g;
                     },
                     {{"C4.hasSeverity", ex("cr")}},
                     {},
                     1});
    table.push_back({"hazard without a device function",
                     [&](const FixtureSetup& s) {
                         return without(s.input, {role_assertion(ex("dsh"),
                                                                 role("hasDeviceFunction"),
                                                                 ex("df"))});
                     },
                     {{"C5", ex("dsh")}},
                     {},
                     1});
    table.push_back({"risk level without a severity",
                     [&](const FixtureSetup& s) {
                         return without(s.input, {role_assertion(ex("rrl"), role("hasSeverity"),
                                                                 severity_magnitude(4))});
                     },
                     {{"C6", ex("rrl")}},
                     {},
                     1});
    table.push_back({"SDA leaf without an implementation manifest",
                     [&](const FixtureSetup& s) {
                         return without(s.input,
                                        {role_assertion(ex("sd2"),
                                                        role("hasImplementationManifest"),
                                                        ex("im2"))});
                     },
                     {{"C7", ex("sd2")}},
                     {},
                     1});
    table.push_back({"component asserted to be a hazard",
                     [&](const FixtureSetup& s) {
                         return with_extra(s.input,
                                           {concept_assertion(ex("dcm"), cls("Hazard"))});
                     },
                     {},
                     {ex("dcm")},
                     3});
    return table;
}

void criterion_mutations() {
    FixtureSetup setup = make_fixture_setup();
    Schema schema{builtin_constraints(vocab)};
    auto table = mutation_table();

    bool all_ok = true;
    std::string first_failure;

    double seconds = run_seconds([&] {
        for (const auto& mutation : table) {
            Graph input = mutation.apply(setup);
            MaterializeResult mat = materialize(input, setup.rules);
            auto clashes = check_consistency(mat.closure, setup.disjoint_pairs);
            ShapeValidationResult shapes = validate(mat.closure, schema);

            std::vector<std::pair<std::string, Term>> actual;
            for (const auto& v : shapes.violations) actual.emplace_back(v.constraint_id, v.focus);
            std::vector<Term> clash_individuals;
            for (const auto& c : clashes) clash_individuals.push_back(c.individual);

            int exit_code = !clashes.empty() ? 3 : (shapes.violations.empty() ? 0 : 1);

            bool ok = actual == mutation.expected_violations &&
                      clash_individuals == mutation.expected_clashes &&
                      exit_code == mutation.expected_exit;
            if (!ok && all_ok) {
                all_ok = false;
                first_failure = mutation.name;
            }
        }
    });

    char detail[128];
    std::snprintf(detail, sizeof(detail), "%zu mutations, %.2f s%s%s", table.size(), seconds,
                  first_failure.empty() ? "" : ", first failure: ", first_failure.c_str());
    report(4, "mutation suite", all_ok && seconds < 5.0 && table.size() >= 10, detail);
}

// --- criterion 5: oracle equivalence ------------------------------------------

void criterion_oracles() {
    FixtureSetup setup = make_fixture_setup(PsConfig{3, 3});
    PsOntology ps33 = generate_ps(PsConfig{3, 3}, vocab, kDefaultNamespace);

    std::size_t reasoner_mismatches = 0;
    RandomAboxGen gen(0xACCE97);
    for (int round = 0; round < 200; ++round) {
        Graph g = gen.generate(25, 120, round % 2 == 0);
        if (round % 2 == 0)
            for (const auto& a : ps33.abox) g.add(a);
        MaterializeResult semi = materialize(g, setup.rules);
        Graph naive = naive_materialize(g, setup.rules);
        if (semi.closure.assertions() != naive.assertions()) ++reasoner_mismatches;
    }

    std::size_t shape_mismatches = 0;
    ShapeGen shapes(0x5EED);
    RandomAboxGen abox(0x5EED + 1);
    for (int round = 0; round < 200; ++round) {
        Graph g = abox.generate(12, 40, false);
        g.freeze();
        ShapeExpr s = shapes.shape(4, g.nodes());
        if (eval_shape(g, s) != oracle_shape(g, s)) ++shape_mismatches;
    }

    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "200 reasoner instances (%zu mismatches), 200 shapes (%zu mismatches)",
                  reasoner_mismatches, shape_mismatches);
    report(5, "oracle equivalence", reasoner_mismatches == 0 && shape_mismatches == 0, detail);
}

// --- criterion 6: extensibility demo -------------------------------------------

void criterion_extension() {
    std::string mutated = fixture_turtle();
    auto replace = [&](const std::string& from, const std::string& to) {
        auto pos = mutated.find(from);
        if (pos != std::string::npos) mutated.replace(pos, from.size(), to);
    };
    replace("rm:hasProbability rm:p3", "rm:hasProbability rm:p5");
    replace("rm:hasProbability rm:p5 ;\n       rm:hasSeverity rm:s4",
            "rm:hasProbability rm:p5 ;\n       rm:hasSeverity rm:s3");

    std::string tmp_dir = "/tmp/riskman_acceptance";
    std::filesystem::create_directories(tmp_dir);
    std::string onto_path = tmp_dir + "/critical.dsl";
    std::string shapes_path = tmp_dir + "/critical-shapes.dsl";
    write_file(onto_path,
               "(gci (and (some hasProbability (ind p5)) (some hasSeverity (ind s3)))"
               " (class CriticalRiskLevel))\n");
    write_file(shapes_path,
               "(constraint ControlledRisk (not (some (path hasResidualRiskLevel)"
               " (class CriticalRiskLevel))))\n");

    PipelineConfig config;
    config.extra_ontology_files = {onto_path};
    config.extra_shape_files = {shapes_path};
    PipelineResult result =
        run_validate_texts(config, {{"pump.ttl", mutated, InputFormat::Turtle}});

    std::size_t extension_violations = 0;
    bool at_cr = true;
    for (const auto& v : result.report.violations) {
        if (v.constraint_id.rfind("X", 0) == 0) {
            ++extension_violations;
            at_cr = at_cr && v.focus == ex("cr");
        }
    }
    report(6, "extensibility demo", result.exit_code == 1 && extension_violations == 1 && at_cr);
}

// --- criterion 7: scale algebra --------------------------------------------------

void criterion_ps_algebra() {
    bool ok = true;
    for (int pi = 1; pi <= 8 && ok; ++pi) {
        for (int i = 1; i <= pi && ok; ++i) {
            for (int j = 1; j <= pi && ok; ++j) {
                int k = multiply_magnitudes(i, j, pi);
                if (k != multiply_magnitudes(j, i, pi)) ok = false;
                if (i < pi && multiply_magnitudes(i + 1, j, pi) < k) ok = false;
                if ((k == pi) != (i == pi && j == pi)) ok = false;
            }
        }
    }

    bool gt_ok = true;
    for (int pi = 2; pi <= 8 && gt_ok; ++pi) {
        PsOntology ps = generate_ps(PsConfig{pi, pi}, vocab, kDefaultNamespace);
        Graph g;
        for (const auto& a : ps.abox) g.add(a);
        MaterializeResult mat = materialize(g, compile_axioms(ps.tbox, vocab.ns()));
        Term gt = vocab.role_term("gt");
        std::size_t pairs = 0;
        for (int hi = 1; hi <= pi; ++hi)
            for (int lo = 1; lo <= pi; ++lo)
                if (mat.closure.has_role(probability_magnitude(hi), gt, probability_magnitude(lo)))
                    ++pairs;
        if (pairs != static_cast<std::size_t>(pi * (pi - 1) / 2)) gt_ok = false;
    }

    report(7, "scale algebra properties", ok && gt_ok);
}

// --- criterion 8: desk-scale performance ------------------------------------------

Graph synthetic_corpus(int risk_count) {
    Graph g;
    Vocabulary v;
    auto role = [&](const char* local) { return v.role_term(local); };
    std::string ns = "https://example.org/corpus#";
    auto node = [&](int i, const char* local) {
        return iri(ns + "r" + std::to_string(i) + "_" + local);
    };

    for (int i = 0; i < risk_count; ++i) {
        Term cr = node(i, "cr"), ar = node(i, "ar"), rrl = node(i, "rrl"), irl = node(i, "irl");
        Term dsh = node(i, "dsh"), hs = node(i, "hs"), dcx = node(i, "dcx"), pp = node(i, "pp");
        Term hr = node(i, "hr");
        g.add(role_assertion(cr, role("isMitigatedBy"), node(i, "sd0")));
        g.add(role_assertion(cr, role("hasAnalyzedRisk"), ar));
        g.add(role_assertion(cr, role("hasResidualRiskLevel"), rrl));
        g.add(role_assertion(ar, role("hasInitialRiskLevel"), irl));
        g.add(role_assertion(ar, role("hasDomainSpecificHazard"), dsh));
        g.add(role_assertion(ar, role("hasHazardousSituation"), hs));
        g.add(role_assertion(ar, role("hasDeviceContext"), dcx));
        g.add(role_assertion(ar, role("hasPatientProblem"), pp));
        g.add(role_assertion(ar, role("hasHarm"), hr));
        g.add(role_assertion(rrl, role("hasProbability"), probability_magnitude(1 + i % 3)));
        g.add(role_assertion(rrl, role("hasSeverity"), severity_magnitude(1 + i % 4)));
        g.add(role_assertion(irl, role("hasProbability1"), probability_magnitude(1 + (i + 2) % 5)));
        g.add(role_assertion(irl, role("hasProbability2"), probability_magnitude(1 + (i + 3) % 5)));
        g.add(role_assertion(irl, role("hasSeverity"), severity_magnitude(1 + i % 4)));
        g.add(role_assertion(dsh, role("hasDeviceProblem"), node(i, "dp")));
        g.add(role_assertion(dsh, role("hasDeviceFunction"), node(i, "df")));
        g.add(role_assertion(dsh, role("hasDeviceComponent"), node(i, "dcm")));
        g.add(role_assertion(dsh, role("hasHazard"), node(i, "hz")));
        g.add(role_assertion(hs, role("hasEvent"), node(i, "ev2")));
        g.add(role_assertion(node(i, "ev2"), role("hasPrecedingEvent"), node(i, "ev1")));
        g.add(role_assertion(node(i, "sd0"), role("hasSubSDA"), node(i, "sd1")));
        g.add(role_assertion(node(i, "sd0"), role("hasSubSDA"), node(i, "sd2")));
        g.add(role_assertion(node(i, "sd0"), role("hasSubSDA"), node(i, "sd3")));
        g.add(role_assertion(node(i, "sd3"), role("hasSubSDA"), node(i, "sd4")));
        g.add(role_assertion(node(i, "sd3"), role("hasSubSDA"), node(i, "sd5")));
        g.add(role_assertion(node(i, "sd1"), role("hasImplementationManifest"), node(i, "im1")));
        g.add(role_assertion(node(i, "sd2"), role("hasImplementationManifest"), node(i, "im2")));
        g.add(role_assertion(node(i, "sd4"), role("hasImplementationManifest"), node(i, "im4")));
        g.add(role_assertion(node(i, "sd5"), role("hasImplementationManifest"), node(i, "im5")));
        g.add(role_assertion(node(i, "sd5"), role("hasSafetyAssurance"), node(i, "sa")));
    }
    return g;
}

void criterion_performance() {
    FixtureSetup setup = make_fixture_setup(); // rules + 5x5 scale
    Graph corpus = synthetic_corpus(10'000);
    PsOntology ps = generate_ps(PsConfig{5, 5}, vocab, kDefaultNamespace);
    for (const auto& a : ps.abox) corpus.add(a);

    std::size_t closure_size = 0;
    std::size_t violations = 0;
    double seconds = run_seconds([&] {
        MaterializeResult mat = materialize(corpus, setup.rules);
        closure_size = mat.closure.size();
        Schema schema{builtin_constraints(vocab)};
        ShapeValidationResult result = validate(mat.closure, schema);
        violations = result.violations.size();
    });

    struct rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    double peak_gb = static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);

    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "closure %zu assertions, %zu violations, %.1f s, peak rss %.2f GB",
                  closure_size, violations, seconds, peak_gb);
    report(8, "desk-scale performance", seconds <= 30.0 && peak_gb <= 2.0 && violations == 0,
           detail);
}

} // namespace

int main() {
    criterion_closure();
    criterion_multiplication();
    criterion_fixture_validation();
    criterion_mutations();
    criterion_oracles();
    criterion_extension();
    criterion_ps_algebra();
    criterion_performance();

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
