#pragma once

#include "riskman/axioms.hpp"

#include <string>
#include <vector>

namespace riskman {

// Probability/severity scale sizes; 5x5 is the common default.
struct PsConfig {
    int pi = 5;
    int sigma = 5;
};

struct PsOntology {
    std::vector<Axiom> tbox;        // pi^2 multiplication GCIs + transitive(gt)
    std::vector<Assertion> abox;    // magnitude memberships + the gt chain
    std::vector<Term> individuals;  // p1..p_pi, s1..s_sigma
    std::vector<std::pair<Term, std::string>> labels; // human-readable, 5-point scales only
};

// Index of the overall-probability magnitude for P1 = i, P2 = j on a
// pi-point logarithmic scale: k = max(1, i + j - pi).
int multiply_magnitudes(int i, int j, int pi);

PsOntology generate_ps(const PsConfig& config, const Vocabulary& vocab = Vocabulary{},
                       const std::string& magnitude_ns = kDefaultNamespace);

Term probability_magnitude(int i, const std::string& magnitude_ns = kDefaultNamespace);
Term severity_magnitude(int i, const std::string& magnitude_ns = kDefaultNamespace);

} // namespace riskman
