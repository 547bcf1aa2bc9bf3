#pragma once

#include "riskman/dsl.hpp"
#include "riskman/fixture.hpp"
#include "riskman/parsers.hpp"
#include "riskman/ps.hpp"
#include "riskman/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace riskman {

enum class ReportFormat { Text, Json };

struct PipelineConfig {
    std::vector<std::string> inputs;
    InputFormat format = InputFormat::Auto;
    std::optional<PsConfig> ps = PsConfig{}; // nullopt = scale plugin disabled
    std::vector<std::string> extra_ontology_files;
    std::vector<std::string> extra_shape_files;
    std::map<std::string, std::string> prefix_overrides; // prefix -> namespace IRI
    std::optional<std::string> emit_materialized;
    std::optional<std::string> provenance_file;
    ReportFormat report_format = ReportFormat::Text;
    bool assume_risk_sda = false;
    ResourceLimits limits{};
};

struct PipelineResult {
    ValidationReport report;
    int exit_code = 0;
    Graph closure;      // frozen materialized graph
    PrefixMap prefixes; // effective prefix map (for rendering)
};

// Exit codes: 0 conforms, 1 violations, 3 inconsistency (outranks 1).
// Usage, parse, and resource-limit failures throw; the CLI maps them to 2.
PipelineResult run_validate(const PipelineConfig& config);

// In-memory variant used by tests and the bindings: pairs of
// (document, format) instead of file paths.
struct NamedInput {
    std::string name;
    std::string text;
    InputFormat format = InputFormat::Auto;
};
PipelineResult run_validate_texts(const PipelineConfig& config,
                                  const std::vector<NamedInput>& inputs);

// ps-gen output: the multiplication axioms in DSL form plus the magnitude
// ABox as N-Triples (labels as comments).
struct PsGenOutput {
    std::string axioms_dsl;
    std::string abox_ntriples;
};
PsGenOutput render_ps_gen(const PsConfig& config);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace riskman
