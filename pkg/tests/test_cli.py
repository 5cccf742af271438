import json

import pytest

from testtdo.cli import main
from testtdo.generator import minimal_motif, perturb
from testtdo.tkb import serialize


@pytest.fixture()
def motif_file(tmp_path):
    path = tmp_path / "motif.tkb"
    path.write_text(serialize(minimal_motif().finalize()), encoding="utf-8")
    return path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_passing_file(capsys, motif_file):
    code, out, err = run(capsys, "validate", str(motif_file))
    assert code == 0
    assert "verdict: pass" in out
    assert err == ""


def test_validate_violating_file(capsys, tmp_path):
    perturbed = perturb(minimal_motif().finalize(), seed=7, kind="A7")
    path = tmp_path / "bad.tkb"
    path.write_text(serialize(perturbed), encoding="utf-8")
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 1
    assert "AX-A7" in out


def test_validate_syntax_error_exits_2(capsys, tmp_path):
    path = tmp_path / "broken.tkb"
    path.write_text("individual oops :", encoding="utf-8")
    code, out, err = run(capsys, "validate", str(path))
    assert code == 2
    assert "expected" in err
    assert out == ""


def test_validate_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "validate", str(tmp_path / "absent.tkb"))
    assert code == 2
    assert err


def test_validate_fail_on_threshold(capsys, tmp_path):
    path = tmp_path / "draft.tkb"
    path.write_text("individual tp : TestProject\n", encoding="utf-8")
    code, out, _ = run(capsys, "validate", str(path), "--mode", "draft")
    assert code == 0 and "W020" in out
    code, _, _ = run(capsys, "validate", str(path), "--mode", "draft", "--fail-on", "warning")
    assert code == 1
    code, _, _ = run(capsys, "validate", str(path))  # complete: E020 errors
    assert code == 1


def test_validate_json_format(capsys, motif_file):
    code, out, _ = run(capsys, "validate", str(motif_file), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "pass"
    assert list(payload) == ["verdict", "mode", "counts", "diagnostics"]


def test_schema_counts_line(capsys):
    code, out, _ = run(capsys, "schema", "counts")
    assert code == 0
    assert out == "own=44 reused=4 attributes=51 relationships=43 axioms=17\n"


def test_schema_attrs_for_term(capsys):
    code, out, _ = run(capsys, "schema", "attrs", "--term", "TestGoal")
    assert code == 0
    for attr in ("label", "statement", "purpose", "success_criteria"):
        assert f"TestGoal.{attr}:" in out


def test_schema_unknown_term_exits_2(capsys):
    code, _, err = run(capsys, "schema", "terms", "--term", "Nope")
    assert code == 2
    assert "unknown term" in err


def test_schema_terms_json_fields(capsys):
    code, out, _ = run(capsys, "schema", "terms", "--term", "TestSuite", "--format", "json")
    assert code == 0
    (record,) = json.loads(out)
    assert record == {
        "canonical_name": "TestSuite",
        "display_name": "Test Suite",
        "synonyms": ["Test Set"],
        "definition": record["definition"],
        "provenance": "TestTDO",
        "kind": "own_or_extended",
    }
    assert record["definition"].startswith("It is a Test Specification")


def test_schema_rels_filter(capsys):
    code, out, _ = run(capsys, "schema", "rels", "--name", "consumes", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 6
    assert all(row["rel_name"] == "consumes" for row in rows)
    assert {"rel_name", "source", "target", "source_min", "source_max", "target_min", "target_max", "definition"} == set(
        rows[0]
    )


def test_axioms_list_is_seventeen_lines(capsys):
    code, out, _ = run(capsys, "axioms", "list")
    assert code == 0
    assert len(out.splitlines()) == 17


def test_axioms_show_mentions_deviation(capsys):
    code, out, _ = run(capsys, "axioms", "show", "A10")
    assert code == 0
    assert "Negation scope" in out
    assert "(forall (dt spbm ts)" in out


def test_axioms_show_unknown_exits_2(capsys):
    code, _, err = run(capsys, "axioms", "show", "A0")
    assert code == 2
    assert "unknown axiom" in err


def test_generate_then_validate_round(capsys, tmp_path):
    out_file = tmp_path / "gen.tkb"
    code, _, _ = run(capsys, "generate", "--seed", "1", "--size", "10", "-o", str(out_file))
    assert code == 0
    code, out, _ = run(capsys, "validate", str(out_file))
    assert code == 0
    assert "verdict: pass" in out


def test_generate_negative_size_is_usage_error(capsys):
    code, _, _ = run(capsys, "generate", "--seed", "1", "--size", "-5")
    assert code == 2


def test_generate_oversized_exits_2(capsys):
    code, _, err = run(capsys, "generate", "--seed", "1", "--size", "10001")
    assert code == 2
    assert "size" in err


def test_fmt_is_idempotent(capsys, tmp_path):
    path = tmp_path / "messy.tkb"
    path.write_text('link part_of(a,t)\nindividual t:Testing\nindividual a : DesignTesting {x="1"}\n')
    assert run(capsys, "fmt", str(path))[0] == 0
    once = path.read_text()
    assert run(capsys, "fmt", str(path))[0] == 0
    assert path.read_text() == once
    assert once.index("individual a") < once.index("individual t") < once.index("link part_of")


def test_fmt_syntax_error_exits_2(capsys, tmp_path):
    path = tmp_path / "broken.tkb"
    original = "individual ???"
    path.write_text(original)
    code, _, err = run(capsys, "fmt", str(path))
    assert code == 2 and err
    assert path.read_text() == original


def test_repeated_runs_are_byte_identical(capsys, motif_file):
    outputs = set()
    for _ in range(2):
        _, out, _ = run(capsys, "validate", str(motif_file), "--format", "json")
        outputs.add(out)
    for _ in range(2):
        _, out, _ = run(capsys, "axioms", "list", "--format", "json")
        outputs.add(out)
    assert len(outputs) == 2  # one unique output per command


def test_usage_error_exit_code(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert main([]) == 2
