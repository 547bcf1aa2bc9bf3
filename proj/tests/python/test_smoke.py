"""Smoke tests for the python bindings: fixture validation, the scale
arithmetic, a mutation, and the distiller."""

import json
import sys

import riskman_validator as rv


def check(condition, label):
    status = "ok" if condition else "FAIL"
    print(f"  {status}: {label}")
    return bool(condition)


def main():
    ok = True

    ok &= check(rv.multiply_magnitudes(3, 4, 5) == 2, "multiply_magnitudes(3,4,5) == 2")
    ok &= check(rv.multiply_magnitudes(5, 5, 5) == 5, "top magnitude is absorbing")

    try:
        rv.multiply_magnitudes(0, 1, 5)
        ok &= check(False, "out-of-range raises")
    except rv.RiskmanError:
        ok &= check(True, "out-of-range raises")

    ps = rv.generate_ps(5, 5)
    ok &= check("transitive" in ps["axioms_dsl"], "ps-gen emits the ordering axiom")
    ok &= check(ps["abox_ntriples"].count("\n") >= 18, "ps-gen emits the magnitude ABox")

    fx = rv.fixture()
    result = rv.validate_texts([("pump.ttl", fx["turtle"])])
    ok &= check(result["exit_code"] == 0, "fixture conforms (exit 0)")
    ok &= check(result["conforms"] and not result["inconsistent"], "fixture report flags")

    report = json.loads(result["report_json"])
    ok &= check(report["conforms"] is True, "report_json parses and conforms")
    ok &= check(report["stats"]["input_assertions"] == 48, "input assertion count")
    ok &= check("CONFORMS" in result["report_text"], "text report verdict")

    html_result = rv.validate_texts([("pump.html", fx["html"])])
    ok &= check(html_result["exit_code"] == 0, "HTML ingestion path conforms")

    mutated = fx["turtle"].replace("ex:sd2 rm:hasImplementationManifest ex:im2 .\n", "")
    broken = rv.validate_texts([("pump.ttl", mutated)])
    ok &= check(broken["exit_code"] == 1, "mutation exits 1")
    ok &= check(
        [v["constraint"] for v in broken["violations"]] == ["C7"],
        "mutation violates exactly C7",
    )
    ok &= check(broken["violations"][0]["focus"].endswith("#sd2"), "violation focus is sd2")

    clash = fx["turtle"] + "\nex:dcm a rm:Hazard .\n"
    inconsistent = rv.validate_texts([("pump.ttl", clash)])
    ok &= check(inconsistent["exit_code"] == 3, "clash exits 3")
    ok &= check(inconsistent["inconsistent"], "clash sets the inconsistent flag")

    nt = rv.distill(fx["html"], "https://example.org/infusion-pump#")
    ok &= check(nt.count("\n") == 32, "distiller extracts all 32 fixture triples")

    if not ok:
        sys.exit(1)
    print("python smoke tests passed")


if __name__ == "__main__":
    main()
