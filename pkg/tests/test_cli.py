import json
import subprocess
import sys

from crystal_tableaux import make_type_spec, serialize, t_infinity
from crystal_tableaux.cli import main


def write(tmp_path, obj, name="doc.json"):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(path)


def tinf_doc(tmp_path, family="B", n=3):
    return write(tmp_path, serialize(t_infinity(make_type_spec(family, n)), "binfty"))


def test_act(tmp_path, capsys):
    path = tinf_doc(tmp_path)
    assert main(["act", "--model", "binfty", "--word", "f3", "--in", path]) == 0
    assert json.loads(capsys.readouterr().out)["rows"] == [["1", "1", "1", "1"], ["2", "2", "2"], ["3", "0"]]
    assert main(["act", "--model", "binfty", "--word", "e1", "--in", path]) == 0
    assert capsys.readouterr().out.strip() == "none"
    assert main(["act", "--model", "binfty", "--word", "f1,f2,e2,e1", "--in", path]) == 0
    assert json.loads(capsys.readouterr().out)["rows"] == [["1", "1", "1"], ["2", "2"], ["3"]]


def test_act_hw_and_cliff(tmp_path, capsys):
    doc = {"family": "A", "rank": 2, "model": "hw", "rows": [["1", "1"], ["2"]], "lambda": [1, 1]}
    assert main(["act", "--model", "hw", "--word", "f1", "--in", write(tmp_path, doc)]) == 0
    assert json.loads(capsys.readouterr().out)["rows"] == [["1", "2"], ["2"]]
    doc = {"family": "A", "rank": 2, "model": "cliff", "k": {"1": [0, 0], "2": [0]}}
    assert main(["act", "--model", "cliff", "--word", "f2", "--in", write(tmp_path, doc)]) == 0
    assert json.loads(capsys.readouterr().out)["k"] == {"1": [0, 0], "2": [1]}


def test_cliff_conversion(tmp_path, capsys):
    path = tinf_doc(tmp_path)
    assert main(["act", "--model", "binfty", "--word", "f3,f2", "--in", path]) == 0
    lowered = write(tmp_path, capsys.readouterr().out, "low.json")
    assert main(["cliff", "--dir", "to", "--in", lowered]) == 0
    c = capsys.readouterr().out
    assert json.loads(c)["model"] == "cliff"
    assert main(["cliff", "--dir", "from", "--in", write(tmp_path, c, "c.json")]) == 0
    assert json.loads(capsys.readouterr().out) == json.loads(open(lowered).read())


def test_generators(capsys):
    assert main(["gen-hw", "--family", "A", "--rank", "2", "--lambda", "1,1", "--format", "json"]) == 0
    graph = json.loads(capsys.readouterr().out)
    assert len(graph["nodes"]) == 8
    assert main(["gen-binfty", "--family", "G", "--rank", "2", "--depth", "2"]) == 0
    assert capsys.readouterr().out.startswith("digraph")


def test_input_errors(tmp_path, capsys):
    assert main(["gen-hw", "--family", "B", "--rank", "3", "--lambda", "0,0,1"]) == 1
    assert "even" in capsys.readouterr().err
    assert main(["gen-hw", "--family", "A", "--rank", "2", "--lambda", "a,b"]) == 1
    assert main(["act", "--model", "binfty", "--word", "f1", "--in", str(tmp_path / "missing")]) == 1
    assert main(["act", "--model", "cliff", "--word", "f1", "--in", tinf_doc(tmp_path)]) == 1
    assert main(["act", "--model", "binfty", "--word", "f9", "--in", tinf_doc(tmp_path)]) == 1
    assert main(["gen-binfty", "--family", "A", "--rank", "2"]) == 1
    assert main(["cliff", "--dir", "to", "--in", tinf_doc(tmp_path, "G", 2)]) == 1
    assert main(["verify", "--suite", "inverse"]) == 1
    capsys.readouterr()


def test_verify(capsys):
    assert main(["verify", "--suite", "counts", "--family", "G", "--rank", "2", "--depth", "4"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] and report["checks"] > 0
    assert main(["verify", "--suite", "figures"]) == 0
    for suite in ("inverse", "projection", "cliff-morphism"):
        assert main(["verify", "--suite", suite, "--family", "C", "--rank", "2", "--depth", "3"]) == 0


def test_module_entry_point(tmp_path):
    out = subprocess.run(
        [sys.executable, "-m", "crystal_tableaux", "act", "--model", "binfty", "--word", "e1",
         "--in", tinf_doc(tmp_path)],
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and out.stdout.strip() == "none"
