import json
from pathlib import Path

import pytest

from hopfint.cli import EXIT_AXIOM, EXIT_INPUT, EXIT_OK, EXIT_UNSUPPORTED, main
from hopfint.presets import sweedler
from hopfint.serialization import dump_hopf_json, hopf_to_dict

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "sweedler_report.txt": ["report", "preset:sweedler"],
    "sweedler_report.json": ["report", "preset:sweedler", "--json"],
    "taft3_report.json": ["report", "preset:taft_finite(3)", "--json"],
    "circle_report.txt": ["report", "preset:circle_hopf"],
    "taft_family3_report.json": ["report", "preset:taft_family(3)", "--json"],
    "dihedral_report.txt": ["report", "preset:infinite_dihedral"],
    "taft_family3_truncate2.json": ["truncate", "preset:taft_family(3)", "2", "--json"],
    "trivial_tensor.json": ["tensor", "preset:trivial", "preset:trivial", "--json"],
    "taft3_sweedler_tensor.txt": ["tensor", "preset:taft_finite(3)", "preset:sweedler", "--field", "cyc:6"],
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_output(name, capsys, update_golden):
    code, out, _ = run(capsys, *GOLDEN_CASES[name])
    assert code == EXIT_OK
    path = GOLDEN / name
    if update_golden:
        path.write_text(out, encoding="utf-8")
    assert out == path.read_text(encoding="utf-8")


def test_repeated_runs_are_byte_identical(capsys):
    first = run(capsys, "report", "preset:taft_finite(4)", "--json")[1]
    second = run(capsys, "report", "preset:taft_finite(4)", "--json")[1]
    assert first == second


def test_json_report_is_canonical(capsys):
    out = run(capsys, "report", "preset:sweedler", "--json")[1]
    doc = json.loads(out)
    assert list(doc)[:4] == ["input", "kind", "name", "field"]
    assert doc["io"] == 2 and doc["golden_ok"]
    assert out == json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def test_verify_preset(capsys):
    code, out, _ = run(capsys, "verify", "preset:sweedler")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "OK"


def test_verify_family(capsys):
    code, out, _ = run(capsys, "verify", "preset:example85")
    assert code == EXIT_OK
    assert "step 1" in out and out.endswith("OK\n")


@pytest.fixture
def sweedler_file(tmp_path):
    path = tmp_path / "sw.json"
    path.write_text(dump_hopf_json(sweedler()), encoding="utf-8")
    return path


def test_report_from_file_with_field_override(capsys, sweedler_file):
    code, out, _ = run(capsys, "report", str(sweedler_file), "--json", "--field", "cyc:4")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["field"] == "cyc:4" and doc["io"] == 2


def test_broken_antipode_exits_two(capsys, tmp_path):
    doc = hopf_to_dict(sweedler())
    doc["antipode"] = [[i, i, "1"] for i in range(4)]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == EXIT_AXIOM
    assert "FAIL antipode axiom: witnesses [2, 3]" in out
    assert run(capsys, "report", str(path))[0] == EXIT_AXIOM


@pytest.mark.parametrize("argv,code", [
    (["verify", "missing.json"], EXIT_INPUT),
    (["verify", "preset:nonesuch"], EXIT_INPUT),
    (["report", "preset:taft_finite(4,m=2)"], EXIT_INPUT),
    (["report", "preset:sweedler", "--order-cap", "0"], EXIT_INPUT),
    (["report", "preset:sweedler", "--field", "bogus"], EXIT_INPUT),
    (["tensor", "preset:taft_finite(3)", "preset:sweedler"], EXIT_INPUT),
    (["truncate", "preset:infinite_dihedral", "2"], EXIT_INPUT),
    (["truncate", "preset:taft_family(3)", "0"], EXIT_INPUT),
    (["frobnicate"], EXIT_INPUT),
    (["tensor", "preset:taft_family(3)", "preset:sweedler"], EXIT_UNSUPPORTED),
    (["truncate", "preset:sweedler", "2"], EXIT_UNSUPPORTED),
])
def test_exit_codes(argv, code, capsys):
    assert run(capsys, *argv)[0] == code


def test_error_messages_carry_codes(capsys):
    _, _, err = run(capsys, "tensor", "preset:taft_finite(3)", "preset:sweedler")
    assert err.startswith("hopfint: error [FIELD_MISMATCH]")
    _, _, err = run(capsys, "truncate", "preset:infinite_dihedral", "2")
    assert "[TRUNCATION_UNDECLARED]" in err


def test_missing_antipode_names_the_path(capsys, tmp_path):
    doc = hopf_to_dict(sweedler())
    del doc["antipode"]
    path = tmp_path / "partial.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, _, err = run(capsys, "verify", str(path))
    assert code == EXIT_INPUT
    assert "$.antipode: missing" in err


@pytest.mark.parametrize("jobs", ["1", "2"])
def test_batch_report_keeps_input_order(jobs, capsys):
    inputs = ["preset:taft_finite(3)", "preset:sweedler", "preset:klein_four"]
    code, out, _ = run(capsys, "report", *inputs, "--json", "--jobs", jobs)
    assert code == EXIT_OK
    assert [d["input"] for d in json.loads(out)] == inputs


def test_batch_report_returns_worst_code(capsys):
    code, out, err = run(capsys, "report", "preset:sweedler", "preset:nonesuch")
    assert code == EXIT_INPUT
    assert "preset:nonesuch" in err
    assert out.startswith(run(capsys, "report", "preset:sweedler")[1])


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == EXIT_OK
    assert out.startswith("hopfint ")
