#include "riskman/fixture.hpp"

#include "riskman/parsers.hpp"
#include "riskman/ps.hpp"

namespace riskman {

std::string fixture_turtle() {
    return R"ttl(@prefix rm: <https://w3id.org/riskman/ontology#> .
@prefix ex: <https://example.org/infusion-pump#> .

# Controlled risk for the non-audio alarm malfunction of an insulin
# infusion pump. Class labels are intentionally absent; the reasoner
# derives them.

ex:cr rm:isMitigatedBy ex:sd0 ;
      rm:hasAnalyzedRisk ex:ar ;
      rm:hasResidualRiskLevel ex:rrl .

ex:ar rm:hasInitialRiskLevel ex:irl ;
      rm:hasDomainSpecificHazard ex:dsh ;
      rm:hasHazardousSituation ex:hs ;
      rm:hasDeviceContext ex:dcx ;
      rm:hasPatientProblem ex:pp ;
      rm:hasHarm ex:hr .

ex:rrl rm:hasProbability rm:p3 ;
       rm:hasSeverity rm:s4 .

ex:irl rm:hasProbability1 rm:p5 ;
       rm:hasProbability2 rm:p4 ;
       rm:hasSeverity rm:s4 .

ex:dsh rm:hasDeviceProblem ex:dp ;
       rm:hasDeviceFunction ex:df ;
       rm:hasDeviceComponent ex:dcm ;
       rm:hasHazard ex:hz .

ex:hs rm:hasEvent ex:ev2 .
ex:ev2 rm:hasPrecedingEvent ex:ev1 .

ex:sd0 rm:hasSubSDA ex:sd1 , ex:sd2 , ex:sd3 .
ex:sd3 rm:hasSubSDA ex:sd4 , ex:sd5 .

ex:sd1 rm:hasImplementationManifest ex:im1 .
ex:sd2 rm:hasImplementationManifest ex:im2 .
ex:sd4 rm:hasImplementationManifest ex:im4 .
ex:sd5 rm:hasImplementationManifest ex:im5 ;
       rm:hasSafetyAssurance ex:sa .

ex:dp rm:comment "Defective Alarm (IMDRF A160106)" .
ex:pp rm:comment "Loss of consciousness (IMDRF E0119)" .
)ttl";
}

std::string fixture_html() {
    return R"html(<!DOCTYPE html>
<html prefix="rm: https://w3id.org/riskman/ontology# ex: https://example.org/infusion-pump#">
<head>
  <title>Risk management file: insulin infusion pump, alarm malfunction</title>
</head>
<body>
  <section about="ex:cr">
    <h1>Controlled risk</h1>
    <p>Mitigated by <span property="rm:isMitigatedBy" resource="ex:sd0">SDA sd0</span>,
       controlling <span property="rm:hasAnalyzedRisk" resource="ex:ar">analyzed risk ar</span>,
       with <span property="rm:hasResidualRiskLevel" resource="ex:rrl">residual risk level rrl</span>.</p>
  </section>

  <section about="ex:ar">
    <h2>Analyzed risk</h2>
    <ul>
      <li><span property="rm:hasDomainSpecificHazard" resource="ex:dsh">Domain-specific hazard dsh</span></li>
      <li><span property="rm:hasHazardousSituation" resource="ex:hs">Hazardous situation: underdose</span></li>
      <li><span property="rm:hasDeviceContext" resource="ex:dcx">Device context: normal use</span></li>
      <li><span property="rm:hasPatientProblem" resource="ex:pp">Patient problem</span></li>
      <li><span property="rm:hasHarm" resource="ex:hr">Harm: loss of consciousness</span></li>
      <li><span property="rm:hasInitialRiskLevel" resource="ex:irl">Initial risk level irl</span></li>
    </ul>
  </section>

  <section about="ex:irl">
    <h2>Initial risk level</h2>
    <p><span property="rm:hasProbability1" resource="rm:p5">P1: V</span>,
       <span property="rm:hasProbability2" resource="rm:p4">P2: IV</span>,
       <span property="rm:hasSeverity" resource="rm:s4">Severity: IV</span></p>
  </section>

  <section about="ex:rrl">
    <h2>Residual risk level</h2>
    <p><span property="rm:hasProbability" resource="rm:p3">Probability: III</span>,
       <span property="rm:hasSeverity" resource="rm:s4">Severity: IV</span></p>
  </section>

  <section about="ex:dsh">
    <h2>Domain-specific hazard</h2>
    <ul>
      <li><span property="rm:hasDeviceComponent" resource="ex:dcm">Non-audio alarm</span></li>
      <li><span property="rm:hasDeviceFunction" resource="ex:df">Alarm</span></li>
      <li><span property="rm:hasDeviceProblem" resource="ex:dp">Defective alarm</span></li>
      <li><span property="rm:hasHazard" resource="ex:hz">Non-audio alarm malfunction</span></li>
    </ul>
  </section>
  <section about="ex:dp"><span property="rm:comment">Defective Alarm (IMDRF A160106)</span></section>
  <section about="ex:pp"><span property="rm:comment">Loss of consciousness (IMDRF E0119)</span></section>

  <section about="ex:hs">
    <p>Caused by <span property="rm:hasEvent" resource="ex:ev2">vibration cannot be felt</span></p>
  </section>
  <section about="ex:ev2">
    <p>Preceded by <span property="rm:hasPrecedingEvent" resource="ex:ev1">vibration mechanism fails</span></p>
  </section>

  <section about="ex:sd0">
    <h2>Safe design argument: alternative alerting</h2>
    <ul>
      <li><span property="rm:hasSubSDA" resource="ex:sd1">Additional visual signal</span></li>
      <li><span property="rm:hasSubSDA" resource="ex:sd2">Notification recurs</span></li>
      <li><span property="rm:hasSubSDA" resource="ex:sd3">Additional audio alarm</span></li>
    </ul>
  </section>
  <section about="ex:sd3">
    <ul>
      <li><span property="rm:hasSubSDA" resource="ex:sd4">Audio signal if not acknowledged</span></li>
      <li><span property="rm:hasSubSDA" resource="ex:sd5">Audible signal loudness</span></li>
    </ul>
  </section>
  <section about="ex:sd1"><span property="rm:hasImplementationManifest" resource="ex:im1">Sec. 10.3 of alarm report</span></section>
  <section about="ex:sd2"><span property="rm:hasImplementationManifest" resource="ex:im2">Sec. 10.7 of alarm report</span></section>
  <section about="ex:sd4"><span property="rm:hasImplementationManifest" resource="ex:im4">Sec. 10.11 of alarm report</span></section>
  <section about="ex:sd5">
    <span property="rm:hasImplementationManifest" resource="ex:im5">Sec. 5.3 of loudspeaker test</span>
    <span property="rm:hasSafetyAssurance" resource="ex:sa">IEC 60601</span>
  </section>
</body>
</html>
)html";
}

std::string fixture_ntriples() {
    TripleDoc doc = parse_turtle_subset(fixture_turtle());
    return serialize_ntriples(doc.triples);
}

FixtureData fixture_infusion_pump() {
    FixtureData data;
    Vocabulary vocab;

    TripleDoc doc = parse_turtle_subset(fixture_turtle());
    AboxResult mapped = triples_to_abox(doc, vocab);
    data.submission = std::move(mapped.graph);

    auto ex = [](const char* local) { return iri(kFixtureNamespace + std::string(local)); };
    auto C = [&](const char* concept_local, const char* node) {
        return concept_assertion(ex(node), vocab.concept_term(concept_local));
    };
    auto R = [&](const char* role_local, Term s, Term o) {
        return role_assertion(std::move(s), vocab.role_term(role_local), std::move(o));
    };

    auto& delta = data.expected_closure_delta;
    delta.push_back(C("ControlledRisk", "cr"));
    delta.push_back(C("Risk", "cr"));
    delta.push_back(C("AnalyzedRisk", "ar"));
    delta.push_back(C("Risk", "ar"));
    for (const char* sd : {"sd0", "sd1", "sd2", "sd3", "sd4", "sd5"})
        delta.push_back(C("SafeDesignArgument", sd));
    for (const char* sd : {"sd1", "sd2", "sd4", "sd5"}) delta.push_back(C("SDAI", sd));
    delta.push_back(C("AssuranceSDA", "sd5"));
    delta.push_back(C("AssuranceSDAI", "sd5"));
    delta.push_back(C("HazardousSituation", "hs"));
    delta.push_back(C("Event", "ev1"));
    delta.push_back(C("Event", "ev2"));
    delta.push_back(C("RiskLevel", "irl"));
    delta.push_back(C("RiskLevel", "rrl"));
    delta.push_back(C("DeviceContext", "dcx"));
    delta.push_back(C("Harm", "hr"));
    delta.push_back(C("PatientProblem", "pp"));
    delta.push_back(C("DomainSpecificHazard", "dsh"));
    delta.push_back(C("Hazard", "hz"));
    delta.push_back(C("DeviceComponent", "dcm"));
    delta.push_back(C("DeviceFunction", "df"));
    delta.push_back(C("DeviceProblem", "dp"));
    for (const char* im : {"im1", "im2", "im4", "im5"})
        delta.push_back(C("ImplementationManifest", im));
    delta.push_back(C("SafetyAssurance", "sa"));

    delta.push_back(R("hasHarm", ex("cr"), ex("hr")));
    delta.push_back(R("hasRiskLevel", ex("cr"), ex("rrl")));
    delta.push_back(R("hasRiskLevel", ex("ar"), ex("irl")));
    delta.push_back(R("hasProbability", ex("irl"), probability_magnitude(4)));
    delta.push_back(R("gt", probability_magnitude(5), probability_magnitude(3)));

    return data;
}

} // namespace riskman
