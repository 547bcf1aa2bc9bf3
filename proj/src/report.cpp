#include "riskman/report.hpp"

#include <json.hpp>

#include <map>

namespace riskman {

namespace {

// The text report names nodes by their local part; the JSON report carries
// the full IRIs.
std::string display_name(const Term& t, const PrefixMap&) {
    return local_name(t);
}

} // namespace

std::string render_report_text(const ValidationReport& report, const PrefixMap& prefixes) {
    std::string out;
    out += "validation report\n";
    out += "  consistent: ";
    out += report.inconsistent ? "no" : "yes";
    out += "\n  violations: " + std::to_string(report.violations.size());
    out += "\n  clashes:    " + std::to_string(report.clashes.size());
    out += "\n  assertions: " + std::to_string(report.stats.input_assertions) + " input, " +
           std::to_string(report.stats.derived_assertions) + " derived, " +
           std::to_string(report.stats.iterations) + " iterations, " +
           std::to_string(report.leftover_triples) + " leftover triples\n";

    if (!report.focus_counts.empty()) {
        out += "constraints:\n";
        std::map<std::string, std::size_t> violation_counts;
        for (const auto& v : report.violations) ++violation_counts[v.constraint_id];
        for (const auto& [id, focus] : report.focus_counts) {
            out += "  " + id + ": " + std::to_string(focus) + " focus node(s), " +
                   std::to_string(violation_counts[id]) + " violation(s)\n";
        }
    }

    if (!report.violations.empty()) {
        out += "violations:\n";
        for (const auto& v : report.violations) {
            out += "  " + v.constraint_id + " ";
            if (!v.head_concept.empty())
                out += local_name(std::string_view(v.head_concept)) + " ";
            out += display_name(v.focus, prefixes) + ": " + v.message + "\n";
        }
    }
    if (!report.clashes.empty()) {
        out += "clashes:\n";
        for (const auto& c : report.clashes) {
            out += "  " + display_name(c.individual, prefixes) + ": " +
                   local_name(std::string_view(c.concept_a)) + " vs " +
                   local_name(std::string_view(c.concept_b)) + "\n";
        }
    }
    if (!report.ingestion_warnings.empty()) {
        out += "ingestion warnings (" + std::to_string(report.ingestion_warnings.size()) + "):\n";
        for (const auto& w : report.ingestion_warnings) out += "  " + w + "\n";
    }

    if (report.inconsistent) out += "verdict: INCONSISTENT\n";
    else if (report.conforms) out += "verdict: CONFORMS\n";
    else out += "verdict: NOT CONFORMING\n";
    return out;
}

std::string render_report_json(const ValidationReport& report) {
    nlohmann::ordered_json j;
    j["conforms"] = report.conforms;
    j["inconsistent"] = report.inconsistent;

    auto violations = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) {
        nlohmann::ordered_json vj;
        vj["constraint"] = v.constraint_id;
        vj["focus"] = v.focus.kind == TermKind::Blank ? "_:" + v.focus.value : v.focus.value;
        if (v.variant.empty()) vj["variant"] = nullptr;
        else vj["variant"] = v.variant;
        vj["message"] = v.message;
        violations.push_back(std::move(vj));
    }
    j["violations"] = std::move(violations);

    auto clashes = nlohmann::ordered_json::array();
    for (const auto& c : report.clashes) {
        nlohmann::ordered_json cj;
        cj["individual"] =
            c.individual.kind == TermKind::Blank ? "_:" + c.individual.value : c.individual.value;
        cj["concepts"] = {c.concept_a, c.concept_b};
        clashes.push_back(std::move(cj));
    }
    j["clashes"] = std::move(clashes);

    j["stats"] = {{"input_assertions", report.stats.input_assertions},
                  {"derived_assertions", report.stats.derived_assertions},
                  {"iterations", report.stats.iterations},
                  {"leftover_triples", report.leftover_triples},
                  {"elapsed_ms", report.stats.elapsed_ms}};
    return j.dump(2) + "\n";
}

ValidationReport parse_report_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    ValidationReport report;
    report.conforms = j.at("conforms").get<bool>();
    report.inconsistent = j.at("inconsistent").get<bool>();

    auto term_from = [](const std::string& text) {
        if (text.rfind("_:", 0) == 0) return blank(text.substr(2));
        return iri(text);
    };

    for (const auto& vj : j.at("violations")) {
        ShapeViolation v;
        v.constraint_id = vj.at("constraint").get<std::string>();
        v.focus = term_from(vj.at("focus").get<std::string>());
        if (!vj.at("variant").is_null()) v.variant = vj.at("variant").get<std::string>();
        v.message = vj.at("message").get<std::string>();
        report.violations.push_back(std::move(v));
    }
    for (const auto& cj : j.at("clashes")) {
        ClashRecord c;
        c.individual = term_from(cj.at("individual").get<std::string>());
        c.concept_a = cj.at("concepts").at(0).get<std::string>();
        c.concept_b = cj.at("concepts").at(1).get<std::string>();
        report.clashes.push_back(std::move(c));
    }
    const auto& stats = j.at("stats");
    report.stats.input_assertions = stats.at("input_assertions").get<std::size_t>();
    report.stats.derived_assertions = stats.at("derived_assertions").get<std::size_t>();
    report.stats.iterations = stats.at("iterations").get<std::size_t>();
    report.leftover_triples = stats.at("leftover_triples").get<std::size_t>();
    report.stats.elapsed_ms = stats.at("elapsed_ms").get<long long>();
    return report;
}

} // namespace riskman
