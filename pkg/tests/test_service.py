from fastapi.testclient import TestClient

from conftest import fixture_text
from testtdo.generator import minimal_motif
from testtdo.service.app import app
from testtdo.tkb import serialize

client = TestClient(app)


def test_health():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_schema_counts_endpoint():
    assert client.get("/schema/counts").json() == {
        "own": 44,
        "reused": 4,
        "attributes": 51,
        "relationships": 43,
        "axioms": 17,
    }


def test_schema_terms_endpoint():
    (record,) = client.get("/schema/terms", params={"term": "TestSuite"}).json()
    assert record["synonyms"] == ["Test Set"]
    assert client.get("/schema/terms", params={"term": "Nope"}).status_code == 404
    assert len(client.get("/schema/terms").json()) == 64


def test_schema_attrs_and_rels_endpoints():
    attrs = client.get("/schema/attrs", params={"term": "TestGoal"}).json()
    assert {a["attr_name"] for a in attrs} == {"label", "statement", "purpose", "success_criteria"}
    rels = client.get("/schema/rels", params={"name": "produces"}).json()
    assert len(rels) == 5
    assert {r["target_max"] for r in rels} == {1, None}


def test_axioms_endpoints():
    assert len(client.get("/axioms").json()) == 17
    detail = client.get("/axioms/A10").json()
    assert any("Negation scope" in note for note in detail["deviations"])
    assert detail["formula"].startswith("(forall")
    assert client.get("/axioms/A18").status_code == 404


def test_validate_endpoint_pass():
    document = serialize(minimal_motif().finalize())
    response = client.post("/validate", json={"document": document})
    assert response.status_code == 200
    payload = response.json()
    assert payload["verdict"] == "pass"
    assert payload["counts"] == {"errors": 0, "warnings": 0}


def test_validate_endpoint_reports_axiom_violation():
    response = client.post("/validate", json={"document": fixture_text("A7_violating.tkb")})
    payload = response.json()
    assert payload["verdict"] == "fail"
    ax = [d for d in payload["diagnostics"] if d["code"] == "AX-A7"]
    assert ax and ax[0]["witness"] == {"tr": "ar", "prt": "prt"}
    structural = [d for d in payload["diagnostics"] if not d["code"].startswith("AX-")]
    assert all("witness" not in d for d in structural)


def test_validate_endpoint_draft_mode():
    response = client.post("/validate", json={"document": "individual tp : TestProject\n", "mode": "draft"})
    payload = response.json()
    assert payload["verdict"] == "pass"
    assert {d["code"] for d in payload["diagnostics"]} == {"W020"}


def test_validate_endpoint_parse_failure():
    response = client.post("/validate", json={"document": "individual oops"})
    assert response.status_code == 400
    diagnostics = response.json()["detail"]["diagnostics"]
    assert diagnostics and {"line", "column", "message"} <= set(diagnostics[0])


def test_generate_endpoint_is_deterministic():
    first = client.post("/generate", json={"seed": 9, "size": 12}).json()["document"]
    second = client.post("/generate", json={"seed": 9, "size": 12}).json()["document"]
    assert first == second
    assert client.post("/validate", json={"document": first}).json()["verdict"] == "pass"


def test_generate_endpoint_rejects_bad_size():
    assert client.post("/generate", json={"seed": 1, "size": -3}).status_code == 422


def test_fmt_endpoint_canonicalizes():
    messy = 'link part_of(a,t)\nindividual t:Testing\nindividual a : DesignTesting\n'
    formatted = client.post("/fmt", json={"document": messy}).json()["document"]
    assert formatted.splitlines()[0] == "individual a : DesignTesting"
    again = client.post("/fmt", json={"document": formatted}).json()["document"]
    assert again == formatted
    assert client.post("/fmt", json={"document": "link oops("}).status_code == 400
