import pytest

from omcube import verify
from omcube.verify import REGISTRY, claim, verify_suite


@pytest.mark.parametrize("n", [2, 3])
def test_all_claims_pass(n):
    report = verify_suite(n)
    assert [r.claim for r in report.failed] == []
    assert {r.status for r in report.results} == {"pass"}
    assert len(report.results) == len(REGISTRY)


def test_scale_guard_at_5():
    report = verify_suite(5, ["cross-polytope.cocircuit-family", "cube.flat-dichotomy", "adjoint.edge-circuits-present"])
    status = {r.claim: r for r in report.results}
    assert status["cross-polytope.cocircuit-family"].status == "pass"
    assert status["cube.flat-dichotomy"].status == "skip"
    assert status["cube.flat-dichotomy"].witness.startswith("scale guard: n=5")
    assert status["adjoint.edge-circuits-present"].status == "skip"
    assert report.ok


def test_only_filter():
    report = verify_suite(2, ["covectors.are-localizations"])
    assert [r.claim for r in report.results] == ["covectors.are-localizations"]


def test_crashing_claim_is_a_failure(monkeypatch):
    monkeypatch.setattr(verify, "REGISTRY", dict(REGISTRY))

    @claim("test.crash")
    def _boom(n):
        raise RuntimeError("kaput")

    report = verify.verify_suite(2, ["test.crash"])
    assert not report.ok
    assert report.failed[0].witness == "RuntimeError: kaput"


def test_json_shape():
    data = verify_suite(2, ["cross-polytope.circuits-from-realization"]).to_json()
    assert data["ok"] and data["results"][0]["status"] == "pass"
