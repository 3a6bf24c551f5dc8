import json

import pytest

from src.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from src.kernel import FlagSystem, IncidenceComplex
from src.kernel import serialization as ser


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_build_writes_cxc(capsys, tmp_path):
    path = tmp_path / "do.cxc"
    code, out = run(capsys, "build", "dodecahedron", "--out", str(path))
    assert code == EXIT_OK
    assert "(20, 30, 12)" in out
    assert isinstance(ser.load(path.read_text()), IncidenceComplex)


def test_build_json(capsys):
    code, out = run(capsys, "build", "barrel", "--param", "i=7", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["fvector"] == [28, 42, 16]


def test_build_unknown(capsys):
    code, _ = run(capsys, "build", "icosahedron")
    assert code == EXIT_USAGE


def test_construct_chain_from_file(capsys, tmp_path):
    seed = tmp_path / "do.cxc"
    out = tmp_path / "chain.cxc"
    run(capsys, "build", "dodecahedron", "--out", str(seed))
    code, text = run(capsys, "construct", "A", "--in", str(seed), "--n", "3", "--out", str(out), "--json")
    assert code == EXIT_OK
    assert json.loads(text)["fvector"] == [40, 60, 22]


def test_construct_quotient_twist(capsys, tmp_path):
    seed = tmp_path / "do.cxc"
    out = tmp_path / "space.cxf"
    run(capsys, "build", "dodecahedron", "--out", str(seed))
    code, text = run(capsys, "construct", "quotient", "--in", str(seed), "--twist", "3", "--out", str(out))
    assert code == EXIT_OK
    assert "(cxf)" in text
    assert isinstance(ser.load(out.read_text()), FlagSystem)


def test_construct_quotient_pairing_file(capsys, tmp_path):
    seed = tmp_path / "do.cxc"
    run(capsys, "build", "dodecahedron", "--out", str(seed))
    pairing = tmp_path / "bad.pairs"
    pairing.write_text("pair 0 1 0\n")
    code, _ = run(capsys, "construct", "quotient", "--in", str(seed), "--pairing", str(pairing))
    assert code == EXIT_USAGE


def test_missing_input_file(capsys, tmp_path):
    code, _ = run(capsys, "census", "--in", str(tmp_path / "nothing.cxc"))
    assert code == EXIT_USAGE


def test_census_and_classify(capsys, tmp_path):
    cube = tmp_path / "cube.cxc"
    corona = tmp_path / "corona.cxc"
    run(capsys, "build", "cube", "--out", str(cube))
    run(capsys, "construct", "B", "--in", str(cube), "--out", str(corona))
    code, out = run(capsys, "census", "--in", str(corona), "--json")
    assert code == EXIT_OK
    assert json.loads(out)["total"] == 54

    code, out = run(capsys, "classify", "--in", str(cube))
    assert code == EXIT_FAIL
    assert out.startswith("rejected")


def test_classify_sphere(capsys, tmp_path):
    path = tmp_path / "f26.cxc"
    run(capsys, "build", "F26", "--out", str(path))
    code, out = run(capsys, "classify", "--in", str(path), "--json")
    assert code == EXIT_OK
    assert json.loads(out)["surface"] == "sphere"


def test_verify_table_rows(capsys):
    code, out = run(capsys, "verify-table", "--rows", "B(cube)")
    assert code == EXIT_OK
    assert out.startswith("PASS")


def test_pipeline(capsys, tmp_path):
    script = tmp_path / "run.pipe"
    script.write_text("F = build cube\nX = construct B F\ncensus X\n")
    code, out = run(capsys, "pipeline", str(script), "--out-dir", str(tmp_path / "out"))
    assert code == EXIT_OK
    assert (tmp_path / "out" / "manifest.json").exists()
    assert "line 3" in out


def test_export_strict(capsys, tmp_path):
    path = tmp_path / "do.cxc"
    run(capsys, "build", "dodecahedron", "--out", str(path))
    code, out = run(capsys, "export", "--in", str(path), "--format", "face-list")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 12
    code, _ = run(capsys, "export", "--in", str(path), "--format", "face-list", "--strict")
    assert code == EXIT_USAGE


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["construct", "D"])
    assert exc.value.code == EXIT_USAGE


def test_malformed_document_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.cxc"
    path.write_text("cxc 1 2\nrank 0 1\nrank 1 1\nrank 2 1\nlabel 2\n")
    code, _ = run(capsys, "census", "--in", str(path))
    assert code == EXIT_USAGE
