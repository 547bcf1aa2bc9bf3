#include "riskman/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <sstream>

namespace riskman {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValueError("file-not-found: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValueError("cannot write '" + path + "'");
    out << content;
}

namespace {

// Blank labels are file-local; with several inputs they are skolemized with
// the input index so distinct files never share a blank node.
void skolemize_blanks(TripleDoc& doc, std::size_t input_index, bool multiple_inputs) {
    if (!multiple_inputs) return;
    auto rename = [&](Term& t) {
        if (t.kind == TermKind::Blank) t.value = "f" + std::to_string(input_index) + "_" + t.value;
    };
    for (auto& triple : doc.triples) {
        rename(triple.subject);
        rename(triple.object);
    }
}

std::vector<std::pair<std::string, std::string>> disjoint_pairs_of(const std::vector<Axiom>& axioms) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& a : axioms)
        if (a.kind == Axiom::Kind::Disjoint) out.push_back(a.disjoint_pair);
    return out;
}

PipelineResult run_pipeline(const PipelineConfig& config, std::vector<NamedInput> inputs) {
    auto started = std::chrono::steady_clock::now();

    std::string vocab_ns = kDefaultNamespace;
    if (auto it = config.prefix_overrides.find("rm"); it != config.prefix_overrides.end())
        vocab_ns = it->second;
    std::string ps_ns = vocab_ns;
    if (auto it = config.prefix_overrides.find("ps"); it != config.prefix_overrides.end())
        ps_ns = it->second;

    PrefixMap prefixes = PrefixMap::defaults(vocab_ns, ps_ns);
    prefixes.set("ex", kFixtureNamespace);
    for (const auto& [pfx, ns] : config.prefix_overrides) prefixes.set(pfx, ns);

    Vocabulary vocab(vocab_ns);

    // Parse the submissions; independent files in parallel.
    std::vector<TripleDoc> docs(inputs.size());
    {
        std::vector<std::future<TripleDoc>> futures;
        futures.reserve(inputs.size());
        for (const auto& input : inputs) {
            futures.push_back(std::async(
                inputs.size() > 1 ? std::launch::async : std::launch::deferred,
                [&prefixes, &input]() {
                    InputFormat format = input.format == InputFormat::Auto
                                             ? detect_format(input.name)
                                             : input.format;
                    // Relative references resolve against a file-derived base.
                    return parse_input(input.text, format, "file://" + input.name + "#", prefixes);
                }));
        }
        for (std::size_t i = 0; i < futures.size(); ++i) {
            docs[i] = futures[i].get();
            skolemize_blanks(docs[i], i, inputs.size() > 1);
        }
    }

    // Merge everything into one graph.
    Graph merged;
    std::size_t leftover_count = 0;
    std::vector<std::string> warnings;
    for (const auto& doc : docs) {
        leftover_count += map_triples_into(merged, doc.triples, vocab).size();
        warnings.insert(warnings.end(), doc.warnings.begin(), doc.warnings.end());
    }

    // Ontologies: built-ins, the probability/severity plugin, extensions.
    Ontology builtin = builtin_riskman_ontology(vocab);
    std::vector<Axiom> axioms = builtin.axioms;

    if (config.ps) {
        PsOntology ps = generate_ps(*config.ps, vocab, ps_ns);
        axioms.insert(axioms.end(), ps.tbox.begin(), ps.tbox.end());
        for (const auto& a : ps.abox) merged.add(a);
    }

    DslContext ctx;
    ctx.prefixes = prefixes;
    ctx.default_ns = vocab_ns;
    ctx.vocabulary = vocab;
    for (const auto& path : config.extra_ontology_files) {
        auto extra = parse_axiom_dsl(read_file(path), ctx);
        axioms.insert(axioms.end(), extra.begin(), extra.end());
    }

    std::vector<Rule> rules = compile_axioms(axioms, vocab_ns);

    MaterializeResult mat = materialize(merged, rules, config.limits);

    if (config.assume_risk_sda) {
        // Closed-world default: any SDA not established as an assurance SDA
        // is labelled a risk SDA, then consequences are re-saturated.
        Term sda = vocab.concept_term("SafeDesignArgument");
        Term assurance = vocab.concept_term("AssuranceSDA");
        Term risk_sda = vocab.concept_term("RiskSDA");
        Graph augmented;
        for (const auto& e : mat.closure.encoded()) {
            if (e.kind == AssertionKind::Concept)
                augmented.add_concept(mat.closure.term_of(e.subject),
                                      mat.closure.term_of(e.predicate));
            else
                augmented.add_role(mat.closure.term_of(e.subject), mat.closure.term_of(e.predicate),
                                   mat.closure.term_of(e.object));
        }
        for (const auto& t : mat.closure.literal_triples())
            augmented.add_literal_triple(t[0], t[1], t[2]);
        for (const Term& node : mat.closure.concept_members(sda))
            if (!mat.closure.has_concept(node, assurance)) augmented.add_concept(node, risk_sda);

        std::size_t original_input = mat.stats.input_assertions;
        std::size_t first_iterations = mat.stats.iterations;
        mat = materialize(augmented, rules, config.limits);
        mat.stats.input_assertions = original_input;
        mat.stats.derived_assertions = mat.closure.size() - original_input;
        mat.stats.iterations += first_iterations;
    }

    std::vector<ClashRecord> clashes = check_consistency(mat.closure, disjoint_pairs_of(axioms));

    Schema schema;
    schema.constraints = builtin_constraints(vocab);
    for (const auto& path : config.extra_shape_files) {
        auto extra = parse_shape_dsl(read_file(path), ctx);
        for (auto& c : extra) schema.constraints.push_back(std::move(c));
    }

    ShapeValidationResult shape_result = validate(mat.closure, schema, prefixes);

    PipelineResult result;
    result.prefixes = prefixes;
    result.report.conforms = shape_result.conforms;
    result.report.inconsistent = !clashes.empty();
    result.report.violations = std::move(shape_result.violations);
    result.report.clashes = std::move(clashes);
    result.report.leftover_triples = leftover_count;
    result.report.focus_counts = std::move(shape_result.focus_counts);
    result.report.ingestion_warnings = std::move(warnings);
    result.report.stats = mat.stats;
    result.report.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - started)
                                         .count();

    if (config.emit_materialized) write_file(*config.emit_materialized, graph_to_ntriples(mat.closure));
    if (config.provenance_file) {
        std::string out;
        for (const auto& d : mat.derivations) {
            Assertion a = mat.closure.decode(d.assertion);
            Triple t = a.kind == AssertionKind::Concept
                           ? Triple{a.subject, iri(rdf::type), a.concept_name}
                           : Triple{a.subject, a.role, a.object};
            out += d.rule_id + "\t" + to_ntriples_line(t) + "\n";
        }
        write_file(*config.provenance_file, out);
    }

    if (result.report.inconsistent) result.exit_code = 3;
    else if (!result.report.conforms) result.exit_code = 1;
    else result.exit_code = 0;

    result.closure = std::move(mat.closure);
    return result;
}

} // namespace

PipelineResult run_validate(const PipelineConfig& config) {
    if (config.inputs.empty()) throw ValueError("at least one input file is required");
    std::vector<NamedInput> inputs;
    inputs.reserve(config.inputs.size());
    for (const auto& path : config.inputs) {
        std::string text = read_file(path);
        inputs.push_back({path, std::move(text), config.format});
    }
    return run_pipeline(config, std::move(inputs));
}

PipelineResult run_validate_texts(const PipelineConfig& config,
                                  const std::vector<NamedInput>& inputs) {
    std::vector<NamedInput> resolved = inputs;
    for (auto& input : resolved)
        if (input.format == InputFormat::Auto && config.format != InputFormat::Auto)
            input.format = config.format;
    return run_pipeline(config, std::move(resolved));
}

PsGenOutput render_ps_gen(const PsConfig& config) {
    Vocabulary vocab;
    PsOntology ps = generate_ps(config, vocab, kDefaultNamespace);

    PsGenOutput out;
    DslContext ctx;
    out.axioms_dsl = "; probability-severity scale: pi=" + std::to_string(config.pi) +
                     " sigma=" + std::to_string(config.sigma) + "\n";
    out.axioms_dsl += render_axiom_dsl(ps.tbox, ctx);

    std::vector<Triple> triples;
    for (const auto& a : ps.abox) {
        if (a.kind == AssertionKind::Concept)
            triples.push_back({a.subject, iri(rdf::type), a.concept_name});
        else
            triples.push_back({a.subject, a.role, a.object});
    }
    std::string nt = serialize_ntriples(triples);
    for (const auto& [term, label] : ps.labels)
        nt += to_ntriples_line({term, iri(rdfs::label), literal(label)}) + "\n";
    out.abox_ntriples = nt;
    return out;
}

} // namespace riskman
