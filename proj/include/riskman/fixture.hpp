#pragma once

#include "riskman/graph.hpp"

#include <string>
#include <vector>

namespace riskman {

// The infusion-pump worked example: one controlled risk for a non-audio
// alarm malfunction, its analyzed risk, and the mitigating SDA tree.
// The submission carries role assertions only; every class label is left
// to inference.
struct FixtureData {
    Graph submission;
    std::vector<Assertion> expected_closure_delta; // over fixture individuals
};

FixtureData fixture_infusion_pump();

// The same submission in the three ingestion formats. All three parse to
// the identical assertion set.
std::string fixture_turtle();
std::string fixture_ntriples();
std::string fixture_html();

inline const std::string kFixtureNamespace = "https://example.org/infusion-pump#";

} // namespace riskman
