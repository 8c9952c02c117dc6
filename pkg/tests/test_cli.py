import io
import json

import pytest

from avmlab.cli import approx, main
from avmlab.canon import canonical_form
from avmlab.formats import from_graph6
from avmlab.generators import FamilySpec, build
from fractions import Fraction


def run(argv, capsys=None):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def theta5(tmp_path):
    p = tmp_path / "t5.g6"
    p.write_text("D}_\n")
    return str(p)


def test_compute(theta5):
    code, text = run(["compute", "--input", theta5])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "m=5 m'=9 avm=9/5"
    assert "approximate" in lines[1]
    assert lines[2:] == ["size 1: 1", "size 2: 4"]


def test_compute_edgelist(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("5 6\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n")
    code, text = run(["compute", "-i", str(p), "--format", "edgelist"])
    assert code == 0 and text.startswith("m=5 m'=9 avm=9/5")


def test_approx_digits():
    assert approx(Fraction(13, 7)) == "1.85714285714"
    assert approx(Fraction(9, 5)) == "1.8"


def test_enumerate(theta5):
    code, text = run(["enumerate", "-i", theta5])
    assert code == 0 and text.splitlines() == ["0-1", "0-2 1-3", "0-3 1-2", "0-4 1-2", "0-4 1-3"]


def test_classify_r7(tmp_path):
    g = build(FamilySpec.bowtie(n=7)).relabel([6, 3, 0, 5, 1, 2, 4])
    p = tmp_path / "r7.g6"
    from avmlab.formats import to_graph6
    p.write_text(to_graph6(g) + "\n")
    code, text = run(["classify", "-i", str(p)])
    data = json.loads(text)
    assert code == 0
    assert data["descriptor"]["kind"] == "bowtie"
    assert (data["descriptor"]["p"], data["descriptor"]["q"]) == (3, 3)
    assert data["leaves"] == {"v1": 2}


def test_gen_roundtrip():
    code, text = run(["gen", "--family", "dumbbell", "--r", "2", "--attach", "v1:2,w2:1"])
    assert code == 0
    g = from_graph6(text.strip())
    assert g == build(FamilySpec.dumbbell(r=2, attach={"v1": 2, "w2": 1}))
    code, text = run(["gen", "--family", "theta", "--n", "5"])
    assert text == "D}_\n"


def test_gen_all_bicyclic():
    code, text = run(["gen", "--all-bicyclic", "--n", "6"])
    lines = text.split()
    assert code == 0 and len(lines) == 19 == len(set(lines))
    for line in lines:
        g = from_graph6(line)
        assert canonical_form(g).graph() == g


def test_search_and_verify(tmp_path):
    out = tmp_path / "s.json"
    code, _ = run(["search", "--n", "6", "--out", str(out)])
    data = json.loads(out.read_text())
    assert code == 0 and data["min_avm"] == "13/7" and data["failures"] == []
    code, text = run(["verify", "--suite", "main", "--n-max", "7"])
    assert code == 0 and json.loads(text)["pass"]


def test_export(theta5):
    code, text = run(["export", "-i", theta5, "--format", "dot", "--names"])
    assert code == 0 and 'label="u"' in text and "0 -- 1;" in text


@pytest.mark.parametrize("content", [
    "3 2\n0 1\n", "3 1\n1 0\n", "2 1\n0 5\n", "D}", "x y\n", "\n",
])
def test_malformed_input_exit_3(tmp_path, capsys, content):
    p = tmp_path / "bad"
    p.write_text(content)
    code, text = run(["compute", "-i", str(p)])
    assert code == 3 and text == ""
    assert "error" in capsys.readouterr().err


def test_missing_file_and_not_bicyclic(tmp_path, capsys):
    assert run(["compute", "-i", str(tmp_path / "none")])[0] == 3
    p = tmp_path / "p.txt"
    p.write_text("3 2\n0 1\n1 2\n")
    assert run(["classify", "-i", str(p)])[0] == 3


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["compute"], ["gen"], ["gen", "--all-bicyclic"],
    ["gen", "--family", "theta", "--n", "3"], ["gen", "--family", "bowtie", "--attach", "v1"],
    ["search", "--n", "4"], ["search", "--n", "6", "--jobs", "0"], ["verify", "--suite", "x"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv)[0] == 2


def test_verification_failure_exit_4(monkeypatch):
    from avmlab import verify
    monkeypatch.setattr(verify, "run_suite", lambda *a, **k: {"suite": "x", "cases": [], "pass": False})
    assert run(["verify", "--suite", "gaps"])[0] == 4
