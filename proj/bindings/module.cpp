#include "riskman/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace riskman;

namespace {

InputFormat format_of(const std::string& name) {
    if (name == "auto") return InputFormat::Auto;
    if (name == "ntriples") return InputFormat::NTriples;
    if (name == "turtle") return InputFormat::Turtle;
    if (name == "rdfa-html") return InputFormat::RdfaHtml;
    throw ValueError("unknown format '" + name + "' (auto|ntriples|turtle|rdfa-html)");
}

PipelineConfig build_config(const std::string& format, int pi, int sigma, bool no_ps,
                            const std::vector<std::string>& ontology_extra,
                            const std::vector<std::string>& shapes_extra,
                            const std::map<std::string, std::string>& prefixes,
                            bool assume_risk_sda, std::size_t max_assertions, double max_seconds) {
    PipelineConfig config;
    config.format = format_of(format);
    if (no_ps) config.ps = std::nullopt;
    else config.ps = PsConfig{pi, sigma};
    config.extra_ontology_files = ontology_extra;
    config.extra_shape_files = shapes_extra;
    config.prefix_overrides = prefixes;
    config.assume_risk_sda = assume_risk_sda;
    config.limits.max_assertions = max_assertions;
    config.limits.max_seconds = max_seconds;
    return config;
}

py::dict result_to_dict(const PipelineResult& result) {
    py::dict out;
    out["exit_code"] = result.exit_code;
    out["conforms"] = result.report.conforms;
    out["inconsistent"] = result.report.inconsistent;
    out["report_json"] = render_report_json(result.report);
    out["report_text"] = render_report_text(result.report, result.prefixes);
    py::list violations;
    for (const auto& v : result.report.violations) {
        py::dict vd;
        vd["constraint"] = v.constraint_id;
        vd["focus"] = v.focus.kind == TermKind::Blank ? "_:" + v.focus.value : v.focus.value;
        vd["variant"] = v.variant.empty() ? py::object(py::none()) : py::object(py::str(v.variant));
        vd["message"] = v.message;
        violations.append(vd);
    }
    out["violations"] = violations;
    py::list clashes;
    for (const auto& c : result.report.clashes) {
        py::dict cd;
        cd["individual"] =
            c.individual.kind == TermKind::Blank ? "_:" + c.individual.value : c.individual.value;
        cd["concepts"] = py::make_tuple(c.concept_a, c.concept_b);
        clashes.append(cd);
    }
    out["clashes"] = clashes;
    return out;
}

} // namespace

PYBIND11_MODULE(_riskman, m) {
    m.doc() = "Risk-management graph validation: ingestion, saturation, shape checking";

    py::register_exception<Error>(m, "RiskmanError");

    m.def("multiply_magnitudes", &multiply_magnitudes, py::arg("i"), py::arg("j"), py::arg("pi"),
          "Overall-probability magnitude index: max(1, i + j - pi)");

    m.def(
        "generate_ps",
        [](int pi, int sigma) {
            PsGenOutput out = render_ps_gen(PsConfig{pi, sigma});
            py::dict d;
            d["axioms_dsl"] = out.axioms_dsl;
            d["abox_ntriples"] = out.abox_ntriples;
            return d;
        },
        py::arg("pi") = 5, py::arg("sigma") = 5,
        "Probability-severity scale ontology as axiom DSL plus N-Triples");

    m.def(
        "validate_files",
        [](const std::vector<std::string>& inputs, const std::string& format, int pi, int sigma,
           bool no_ps, const std::vector<std::string>& ontology_extra,
           const std::vector<std::string>& shapes_extra,
           const std::map<std::string, std::string>& prefixes, bool assume_risk_sda,
           std::size_t max_assertions, double max_seconds) {
            PipelineConfig config = build_config(format, pi, sigma, no_ps, ontology_extra,
                                                 shapes_extra, prefixes, assume_risk_sda,
                                                 max_assertions, max_seconds);
            config.inputs = inputs;
            return result_to_dict(run_validate(config));
        },
        py::arg("inputs"), py::arg("format") = "auto", py::arg("pi") = 5, py::arg("sigma") = 5,
        py::arg("no_ps") = false, py::arg("ontology_extra") = std::vector<std::string>{},
        py::arg("shapes_extra") = std::vector<std::string>{},
        py::arg("prefixes") = std::map<std::string, std::string>{},
        py::arg("assume_risk_sda") = false,
        py::arg("max_assertions") = ResourceLimits{}.max_assertions,
        py::arg("max_seconds") = ResourceLimits{}.max_seconds,
        "Run the full distill-saturate-validate pipeline over submission files");

    m.def(
        "validate_texts",
        [](const std::vector<std::pair<std::string, std::string>>& named_texts,
           const std::string& format, int pi, int sigma, bool no_ps,
           const std::vector<std::string>& ontology_extra,
           const std::vector<std::string>& shapes_extra,
           const std::map<std::string, std::string>& prefixes, bool assume_risk_sda,
           std::size_t max_assertions, double max_seconds) {
            PipelineConfig config = build_config(format, pi, sigma, no_ps, ontology_extra,
                                                 shapes_extra, prefixes, assume_risk_sda,
                                                 max_assertions, max_seconds);
            std::vector<NamedInput> inputs;
            for (const auto& [name, text] : named_texts)
                inputs.push_back({name, text, InputFormat::Auto});
            return result_to_dict(run_validate_texts(config, inputs));
        },
        py::arg("inputs"), py::arg("format") = "auto", py::arg("pi") = 5, py::arg("sigma") = 5,
        py::arg("no_ps") = false, py::arg("ontology_extra") = std::vector<std::string>{},
        py::arg("shapes_extra") = std::vector<std::string>{},
        py::arg("prefixes") = std::map<std::string, std::string>{},
        py::arg("assume_risk_sda") = false,
        py::arg("max_assertions") = ResourceLimits{}.max_assertions,
        py::arg("max_seconds") = ResourceLimits{}.max_seconds,
        "Validate in-memory documents; names carry the format extension");

    m.def(
        "distill",
        [](const std::string& html, const std::string& base) {
            TripleDoc doc = distill_rdfa_subset(html, base);
            return serialize_ntriples(doc.triples);
        },
        py::arg("html"), py::arg("base") = "https://example.org/doc#",
        "Extract the triples from RDFa-annotated HTML as N-Triples");

    m.def(
        "fixture",
        []() {
            py::dict d;
            d["turtle"] = fixture_turtle();
            d["ntriples"] = fixture_ntriples();
            d["html"] = fixture_html();
            return d;
        },
        "The embedded infusion-pump example in all three formats");

    m.attr("__version__") = "0.1.0";
}
