#include "riskman/ps.hpp"

namespace riskman {

int multiply_magnitudes(int i, int j, int pi) {
    if (pi < 1) throw ValueError("out-of-range: scale size must be >= 1");
    if (i < 1 || i > pi || j < 1 || j > pi)
        throw ValueError("out-of-range: magnitude indexes must lie in 1.." + std::to_string(pi));
    int k = i + j - pi;
    return k < 1 ? 1 : k;
}

Term probability_magnitude(int i, const std::string& magnitude_ns) {
    return iri(magnitude_ns + "p" + std::to_string(i));
}

Term severity_magnitude(int i, const std::string& magnitude_ns) {
    return iri(magnitude_ns + "s" + std::to_string(i));
}

PsOntology generate_ps(const PsConfig& config, const Vocabulary& vocab,
                       const std::string& magnitude_ns) {
    if (config.pi < 1 || config.sigma < 1)
        throw ValueError("out-of-range: pi and sigma must be >= 1");

    PsOntology ps;
    const std::string p1_role = vocab.iri_for("hasProbability1");
    const std::string p2_role = vocab.iri_for("hasProbability2");
    const std::string p_role = vocab.iri_for("hasProbability");
    const std::string gt_role = vocab.iri_for("gt");
    const Term probability_class = vocab.concept_term("Probability");
    const Term severity_class = vocab.concept_term("Severity");

    for (int i = 1; i <= config.pi; ++i) {
        for (int j = 1; j <= config.pi; ++j) {
            int k = multiply_magnitudes(i, j, config.pi);
            ps.tbox.push_back(Axiom::gci(
                ConceptExpr::conj(
                    {ConceptExpr::exists(p1_role,
                                         ConceptExpr::nominal(probability_magnitude(i, magnitude_ns))),
                     ConceptExpr::exists(p2_role, ConceptExpr::nominal(
                                                      probability_magnitude(j, magnitude_ns)))}),
                ConceptExpr::exists(p_role,
                                    ConceptExpr::nominal(probability_magnitude(k, magnitude_ns)))));
        }
    }
    ps.tbox.push_back(Axiom::transitive(gt_role));

    for (int i = 1; i <= config.pi; ++i) {
        Term p = probability_magnitude(i, magnitude_ns);
        ps.individuals.push_back(p);
        ps.abox.push_back(concept_assertion(p, probability_class));
    }
    for (int i = 1; i <= config.sigma; ++i) {
        Term s = severity_magnitude(i, magnitude_ns);
        ps.individuals.push_back(s);
        ps.abox.push_back(concept_assertion(s, severity_class));
    }
    for (int i = 1; i < config.pi; ++i)
        ps.abox.push_back(role_assertion(probability_magnitude(i + 1, magnitude_ns),
                                         iri(gt_role), probability_magnitude(i, magnitude_ns)));
    for (int i = 1; i < config.sigma; ++i)
        ps.abox.push_back(role_assertion(severity_magnitude(i + 1, magnitude_ns), iri(gt_role),
                                         severity_magnitude(i, magnitude_ns)));

    // Illustrative names for the common 5-point scales only.
    if (config.pi == 5) {
        static const char* kProbabilityNames[] = {"improbable", "remote", "occasional",
                                                  "probable", "frequent"};
        for (int i = 1; i <= 5; ++i)
            ps.labels.emplace_back(probability_magnitude(i, magnitude_ns),
                                   kProbabilityNames[i - 1]);
    }
    if (config.sigma == 5) {
        static const char* kSeverityNames[] = {"I", "II", "III", "IV", "V"};
        for (int i = 1; i <= 5; ++i)
            ps.labels.emplace_back(severity_magnitude(i, magnitude_ns), kSeverityNames[i - 1]);
    }
    return ps;
}

} // namespace riskman
