#include "riskman/pipeline.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace {

using namespace riskman;

InputFormat format_from_string(const std::string& name) {
    if (name == "auto") return InputFormat::Auto;
    if (name == "ntriples") return InputFormat::NTriples;
    if (name == "turtle") return InputFormat::Turtle;
    if (name == "rdfa-html") return InputFormat::RdfaHtml;
    throw CLI::ValidationError("--format", "expected auto|ntriples|turtle|rdfa-html");
}

std::map<std::string, std::string> parse_prefix_flags(const std::vector<std::string>& flags) {
    std::map<std::string, std::string> out;
    for (const auto& flag : flags) {
        auto eq = flag.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--prefix", "expected PFX=IRI, got '" + flag + "'");
        out[flag.substr(0, eq)] = flag.substr(eq + 1);
    }
    return out;
}

struct ValidateArgs {
    std::vector<std::string> inputs;
    std::string format = "auto";
    int pi = 5;
    int sigma = 5;
    bool no_ps = false;
    std::vector<std::string> ontology_extra;
    std::vector<std::string> shapes_extra;
    std::vector<std::string> prefixes;
    std::string emit_materialized;
    std::string provenance;
    std::string report = "text";
    bool assume_risk_sda = false;
    std::size_t max_assertions = ResourceLimits{}.max_assertions;
    double max_seconds = ResourceLimits{}.max_seconds;
};

void add_ingestion_flags(CLI::App* cmd, ValidateArgs& args) {
    cmd->add_option("input", args.inputs, "Submission files (.nt, .ttl, .html)")->required();
    cmd->add_option("--format", args.format, "Input format override")
        ->check(CLI::IsMember({"auto", "ntriples", "turtle", "rdfa-html"}));
    cmd->add_option("--pi", args.pi, "Probability magnitudes (default 5)");
    cmd->add_option("--sigma", args.sigma, "Severity magnitudes (default 5)");
    cmd->add_flag("--no-ps", args.no_ps, "Disable the probability-severity scale plugin");
    cmd->add_option("--ontology-extra", args.ontology_extra, "Extension axiom DSL file(s)");
    cmd->add_option("--shapes-extra", args.shapes_extra, "Extension shape DSL file(s)");
    cmd->add_option("--prefix", args.prefixes, "Prefix mapping PFX=IRI (rm=, ps= remap the vocabulary)");
    cmd->add_option("--max-assertions", args.max_assertions, "Saturation assertion budget");
    cmd->add_option("--max-seconds", args.max_seconds, "Saturation time budget (seconds)");
}

PipelineConfig config_from_args(const ValidateArgs& args) {
    PipelineConfig config;
    config.inputs = args.inputs;
    config.format = format_from_string(args.format);
    if (args.no_ps) config.ps = std::nullopt;
    else config.ps = PsConfig{args.pi, args.sigma};
    config.extra_ontology_files = args.ontology_extra;
    config.extra_shape_files = args.shapes_extra;
    config.prefix_overrides = parse_prefix_flags(args.prefixes);
    if (!args.emit_materialized.empty()) config.emit_materialized = args.emit_materialized;
    if (!args.provenance.empty()) config.provenance_file = args.provenance;
    config.report_format = args.report == "json" ? ReportFormat::Json : ReportFormat::Text;
    config.assume_risk_sda = args.assume_risk_sda;
    config.limits.max_assertions = args.max_assertions;
    config.limits.max_seconds = args.max_seconds;
    return config;
}

int run_validate_cmd(const ValidateArgs& args) {
    PipelineConfig config = config_from_args(args);
    PipelineResult result = run_validate(config);
    if (config.report_format == ReportFormat::Json)
        std::cout << render_report_json(result.report);
    else
        std::cout << render_report_text(result.report, result.prefixes);
    return result.exit_code;
}

int run_materialize_cmd(const ValidateArgs& args, const std::string& output) {
    PipelineConfig config = config_from_args(args);
    config.emit_materialized = output;
    PipelineResult result = run_validate(config);
    std::cerr << "materialized " << result.report.stats.input_assertions << " + "
              << result.report.stats.derived_assertions << " derived assertions -> " << output
              << "\n";
    return result.exit_code == 3 ? 3 : 0;
}

int run_ps_gen_cmd(int pi, int sigma, const std::string& output) {
    PsGenOutput out = render_ps_gen(PsConfig{pi, sigma});
    std::string stem = output;
    if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".dsl") == 0)
        stem.resize(stem.size() - 4);
    write_file(stem + ".dsl", out.axioms_dsl);
    write_file(stem + ".nt", out.abox_ntriples);
    std::cerr << "wrote " << stem << ".dsl and " << stem << ".nt\n";
    return 0;
}

int run_distill_cmd(const std::string& input, const std::string& output) {
    std::string html = read_file(input);
    TripleDoc doc = distill_rdfa_subset(html, "file://" + input + "#");
    write_file(output, serialize_ntriples(doc.triples));
    for (const auto& w : doc.warnings) std::cerr << "warning: " << w << "\n";
    std::cerr << "distilled " << doc.triples.size() << " triples -> " << output << "\n";
    return 0;
}

int run_fixture_cmd(const std::string& dir) {
    std::filesystem::create_directories(dir);
    auto path = [&](const char* name) { return (std::filesystem::path(dir) / name).string(); };
    write_file(path("infusion-pump.ttl"), fixture_turtle());
    write_file(path("infusion-pump.nt"), fixture_ntriples());
    write_file(path("infusion-pump.html"), fixture_html());
    std::cerr << "wrote infusion-pump.{ttl,nt,html} to " << dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Risk-management graph validator: ingest, saturate, validate, report"};
    app.set_version_flag("--version", "riskman 0.1.0");
    app.require_subcommand(1);

    ValidateArgs validate_args;
    auto* validate_cmd =
        app.add_subcommand("validate", "Validate submissions and print a report");
    add_ingestion_flags(validate_cmd, validate_args);
    validate_cmd->add_option("--emit-materialized", validate_args.emit_materialized,
                             "Write the closure as N-Triples");
    validate_cmd->add_option("--provenance", validate_args.provenance,
                             "Write a rule-id sidecar for derived assertions");
    validate_cmd->add_option("--report", validate_args.report, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    validate_cmd->add_flag("--assume-risk-sda", validate_args.assume_risk_sda,
                           "Label every SDA without assurance evidence as a RiskSDA");

    ValidateArgs materialize_args;
    std::string materialize_output;
    auto* materialize_cmd =
        app.add_subcommand("materialize", "Saturate submissions and write the closure");
    add_ingestion_flags(materialize_cmd, materialize_args);
    materialize_cmd->add_option("-o,--output", materialize_output, "Output N-Triples file")
        ->required();

    int ps_pi = 5, ps_sigma = 5;
    std::string ps_output;
    auto* ps_cmd = app.add_subcommand("ps-gen", "Generate the probability-severity scale ontology");
    ps_cmd->add_option("--pi", ps_pi, "Probability magnitudes")->required();
    ps_cmd->add_option("--sigma", ps_sigma, "Severity magnitudes")->required();
    ps_cmd->add_option("-o,--output", ps_output,
                       "Output stem; writes <stem>.dsl (axioms) and <stem>.nt (magnitudes)")
        ->required();

    std::string distill_input, distill_output;
    auto* distill_cmd = app.add_subcommand("distill", "Extract triples from an RDFa HTML file");
    distill_cmd->add_option("input", distill_input, "HTML input file")->required();
    distill_cmd->add_option("-o,--output", distill_output, "Output N-Triples file")->required();

    std::string fixture_dir;
    auto* fixture_cmd =
        app.add_subcommand("fixture", "Write the infusion-pump example in all three formats");
    fixture_cmd->add_option("-o,--output", fixture_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate_cmd)) return run_validate_cmd(validate_args);
        if (app.got_subcommand(materialize_cmd))
            return run_materialize_cmd(materialize_args, materialize_output);
        if (app.got_subcommand(ps_cmd)) return run_ps_gen_cmd(ps_pi, ps_sigma, ps_output);
        if (app.got_subcommand(distill_cmd)) return run_distill_cmd(distill_input, distill_output);
        if (app.got_subcommand(fixture_cmd)) return run_fixture_cmd(fixture_dir);
    } catch (const riskman::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << " (raise --max-assertions/--max-seconds)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
