#pragma once

#include "riskman/reasoner.hpp"
#include "riskman/shapes.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace riskman {

// Final pipeline outcome. `conforms` tracks shape violations and
// `inconsistent` tracks disjointness clashes; the two are independent.
struct ValidationReport {
    bool conforms = true;
    bool inconsistent = false;
    std::vector<ShapeViolation> violations; // sorted by (constraint id, focus IRI)
    std::vector<ClashRecord> clashes;       // sorted
    std::size_t leftover_triples = 0;
    SaturationStats stats;
    std::vector<std::pair<std::string, std::size_t>> focus_counts;
    std::vector<std::string> ingestion_warnings; // ignored markup/attributes

    // Equality over the structured-report fields; head_concept and the
    // focus-count table are text-rendering details, elapsed_ms is timing.
    friend bool operator==(const ValidationReport& a, const ValidationReport& b) {
        auto violation_key = [](const ShapeViolation& v) {
            return std::tie(v.constraint_id, v.focus, v.variant, v.message);
        };
        if (a.violations.size() != b.violations.size()) return false;
        for (std::size_t i = 0; i < a.violations.size(); ++i)
            if (violation_key(a.violations[i]) != violation_key(b.violations[i])) return false;
        auto clash_key = [](const ClashRecord& c) {
            return std::tie(c.individual, c.concept_a, c.concept_b);
        };
        if (a.clashes.size() != b.clashes.size()) return false;
        for (std::size_t i = 0; i < a.clashes.size(); ++i)
            if (clash_key(a.clashes[i]) != clash_key(b.clashes[i])) return false;
        return a.conforms == b.conforms && a.inconsistent == b.inconsistent &&
               a.leftover_triples == b.leftover_triples &&
               a.stats.input_assertions == b.stats.input_assertions &&
               a.stats.derived_assertions == b.stats.derived_assertions &&
               a.stats.iterations == b.stats.iterations;
    }
};

// Human-readable report: verdict, per-constraint summary, one line per
// violation grouped by constraint. Carries no timing, so identical inputs
// render byte-identically.
std::string render_report_text(const ValidationReport& report,
                               const PrefixMap& prefixes = PrefixMap::defaults());

// Machine format; elapsed_ms is the one field that varies between runs.
std::string render_report_json(const ValidationReport& report);

// Inverse of render_report_json (focus counts are text-only and not
// round-tripped).
ValidationReport parse_report_json(const std::string& json_text);

} // namespace riskman
