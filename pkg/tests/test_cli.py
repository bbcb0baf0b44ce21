import io
import json
import subprocess
import sys
from pathlib import Path

import pytest
import yaml

from lefcalc import documents as docs
from lefcalc.cli import main

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def invariants(path):
    code, text = run("invariants", path, "--json")
    assert code == 0
    return json.loads(text)


def test_disk_and_negative_hopf():
    assert invariants(SAMPLES / "disk.yaml")["d3"] == "-1/2"
    r = invariants(SAMPLES / "negative_hopf.yaml")
    assert r["d3"] == "1/2" and r["q"] == 1


def test_json_is_byte_stable():
    a = run("invariants", SAMPLES / "negative_hopf.yaml", "--json")
    b = run("invariants", SAMPLES / "negative_hopf.yaml", "--json")
    assert a == b


def test_text_report():
    code, text = run("invariants", SAMPLES / "disk.yaml")
    assert code == 0 and "d3: -1/2" in text


def test_nonzero_c1_reported_in_band(tmp_path):
    code, _ = run("harer", SAMPLES / "unknot_0.yaml", "-o", tmp_path / "u.yaml")
    assert code == 0
    head, _, tail = (tmp_path / "u.yaml").read_text().rpartition("rotation: 0\n")
    data = head + "rotation: 1\n" + tail
    (tmp_path / "odd.yaml").write_text(data)
    r = invariants(tmp_path / "odd.yaml")
    assert r["d3"] is None and not r["c1"]["zero"]


def test_malformed_file(tmp_path, capsys):
    code, _ = run("invariants", SAMPLES / "malformed.yaml")
    assert code == 2
    err = capsys.readouterr().err
    assert "malformed.yaml:4:7" in err


@pytest.mark.parametrize("text, where", [
    ("schema_version: 1\nkind: alf\nfiber: {genus: 0, boundary_count: 1}\ncycles: []\ncolour: red\n", ":5:1"),
    ("schema_version: 2\nkind: alf\nfiber: {genus: 0, boundary_count: 1}\ncycles: []\n", ":1:17"),
    ("schema_version: 1\nkind: alf\nfiber: {genus: 0, boundary_count: 2}\ncycles:\n  - {class: [1, 0]}\n", ":5:13"),
    ("schema_version: 1\nkind: alf\nfiber: {genus: x, boundary_count: 1}\ncycles: []\n", ":3:16"),
    ("schema_version: 1\nkind: widget\n", ":2:7"),
    ("schema_version: 1\nkind: alf\ncycles: []\n", ":1:1"),
    ("schema_version: 1\nkind: alf\nfiber: {genus: 0, boundary_count: 2}\ncycles:\n  - {class: [1], sign: 3}\n", ":5:24"),
    ("", ""),
])
def test_schema_errors_have_positions(tmp_path, capsys, text, where):
    f = tmp_path / "bad.yaml"
    f.write_text(text)
    code, _ = run("invariants", f)
    assert code == 2
    err = capsys.readouterr().err
    assert f"bad.yaml{where}" in err


def test_wrong_kind_and_missing_file(tmp_path):
    assert run("invariants", SAMPLES / "s4.yaml")[0] == 2
    assert run("invariants", tmp_path / "nope.yaml")[0] == 2


@pytest.mark.parametrize("name", sorted(p.stem for p in SAMPLES.glob("*.yaml")
                                        if p.stem not in ("malformed",)))
def test_round_trip(name, tmp_path):
    kind, obj = docs.read_document(SAMPLES / f"{name}.yaml")
    for fmt in ("yaml", "json"):
        text = docs.dumps(docs.to_dict(obj), fmt)
        kind2, obj2 = docs.parse_document(text)
        assert (kind2, obj2) == (kind, obj)


def test_round_trip_custom_forms(tmp_path):
    from lefcalc import ALF, SeifertForm, VanishingCycle, add_page_handle, Surface
    s = add_page_handle(add_page_handle(Surface(0, 1)), join=0)
    L = SeifertForm(s, [[0, 1], [0, 3]])
    a = ALF(s, [VanishingCycle(s.basis_vector(0), -1, 5)], L)
    assert docs.parse_document(docs.dumps(docs.to_dict(a)))[1] == a


def test_harer_command(tmp_path):
    code, text = run("harer", SAMPLES / "empty_link_n1_2.yaml", "-o", tmp_path / "e.yaml")
    assert code == 0
    kind, a = docs.read_document(tmp_path / "e.yaml")
    assert (a.fiber.genus, a.fiber.boundary_count, len(a.cycles)) == (0, 3, 0)

    code, text = run("harer", SAMPLES / "unknot_m1.yaml", "-o", tmp_path / "m.json")
    assert code == 0 and "PASS" in text
    kind, a = docs.read_document(tmp_path / "m.json")
    assert [c.sign for c in a.cycles] == [1]
    assert (tmp_path / "m.transcript.json").exists()

    code, text = run("harer", SAMPLES / "unknot_0.yaml", "-o", tmp_path / "z.yaml")
    assert code == 0 and "cycles: 2" in text and "PASS" in text
    moves = yaml.safe_load((tmp_path / "z.transcript.yaml").read_text())["moves"]
    assert moves == [{"move": "framing_move", "component": 0, "sign": 1}]


def test_harer_integrity_failure_exit_code(tmp_path, monkeypatch):
    import lefcalc.cli as cli
    monkeypatch.setattr(cli, "_invariant_triple", lambda k: object())
    code, _ = run("harer", SAMPLES / "unknot_0.yaml", "-o", tmp_path / "z.yaml")
    assert code == 3


def test_assemble_command(tmp_path):
    out = tmp_path / "s4"
    code, text = run("assemble", SAMPLES / "s4.yaml", "-o", out, "--format", "json")
    assert code == 0
    assert "framing bit 0" in text and "framing bit 1" in text
    cert = json.loads((out / "certificate.json").read_text())
    assert cert["d3_common"] == "1/2" and cert["negative_stabs"] == [1, 1]
    surgery = json.loads((out / "surgery.json").read_text())
    assert (surgery["input_euler_characteristic"], surgery["euler_characteristic"]) == (2, 4)
    variants = json.loads((out / "variants.json").read_text())["variants"]
    assert [v["bit"] for v in variants] == [0, 1]
    for name in ("transcript", "side1", "side2"):
        assert (out / f"{name}.json").exists()
    docs.read_document(out / "side1.json")

    code, _ = run("assemble", SAMPLES / "cp2.yaml", "-o", tmp_path / "cp2")
    assert code == 0
    assert "d3_common: 1/2" in (tmp_path / "cp2" / "certificate.yaml").read_text()

    assert run("assemble", SAMPLES / "no_4handle.yaml", "-o", tmp_path / "x")[0] == 2


def test_assemble_integrity_exit_code(tmp_path, monkeypatch):
    import lefcalc.cli as cli
    from lefcalc.errors import IntegrityError

    def boom(inp):
        raise IntegrityError("forced")
    monkeypatch.setattr(cli, "run_pipeline", boom)
    assert run("assemble", SAMPLES / "s4.yaml", "-o", tmp_path / "x")[0] == 3


def test_stabilize_command(tmp_path):
    base = invariants(SAMPLES / "disk.yaml")["d3"]
    assert run("stabilize", SAMPLES / "disk.yaml", "--neg", 1, "-o", tmp_path / "n.yaml")[0] == 0
    assert invariants(tmp_path / "n.yaml")["d3"] == "1/2" and base == "-1/2"
    assert run("stabilize", SAMPLES / "disk.yaml", "--pos", 1, "-o", tmp_path / "p.yaml")[0] == 0
    assert invariants(tmp_path / "p.yaml")["d3"] == base

    code, _ = run("stabilize", SAMPLES / "negative_hopf.yaml", "--rot-adjust", "i=0,a=1",
                  "-o", tmp_path / "r.yaml")
    assert code == 0
    _, a = docs.read_document(tmp_path / "r.yaml")
    assert a.cycles[-1].rotation == -2

    assert run("stabilize", SAMPLES / "negative_hopf.yaml", "--rot-adjust", "i=4,a=1",
               "-o", tmp_path / "bad.yaml")[0] == 2


def test_stabilize_open_book(tmp_path):
    ob = tmp_path / "ob.yaml"
    ob.write_text("schema_version: 1\nkind: open_book\npage: {genus: 0, boundary_count: 1}\n"
                  "monodromy: []\n")
    assert run("stabilize", ob, "--pos", 2, "--neg", 1, "-o", tmp_path / "o.yaml")[0] == 0
    _, b = docs.read_document(tmp_path / "o.yaml")
    assert [t.sign for t in b.monodromy] == [1, 1, -1]
    assert run("stabilize", ob, "--rot-adjust", "i=0,a=1", "-o", tmp_path / "x.yaml")[0] == 2


def test_bad_arguments():
    with pytest.raises(SystemExit) as exc:
        main(["stabilize", str(SAMPLES / "disk.yaml"), "--rot-adjust", "q=1", "-o", "x"])
    assert exc.value.code == 2
    assert main(["stabilize", str(SAMPLES / "disk.yaml"), "--neg", "-1", "-o", "x"]) == 2


def test_console_script(tmp_path):
    exe = [sys.executable, "-m", "lefcalc.cli"]
    r = subprocess.run(exe + ["invariants", str(SAMPLES / "disk.yaml"), "--json"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["d3"] == "-1/2"
    r = subprocess.run(exe + ["invariants", str(SAMPLES / "malformed.yaml")],
                       capture_output=True, text=True)
    assert r.returncode == 2
