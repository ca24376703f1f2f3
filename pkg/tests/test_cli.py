"""Command line behavior: JSON output and exit code contract."""

import json
import subprocess
import sys

import pytest

from trumpkit.cli import run
from trumpkit.jsonio import reverify_certificate_dict


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_majorize_holds(capsys):
    code, doc = invoke(capsys, "majorize", "0.3,0.3,0.2,0.2", "0.5,0.25,0.25,0")
    assert code == 0
    assert doc["verdict"] is True
    assert doc["gaps"] == ["1/5", "3/20", "1/5"]


def test_majorize_fails_with_exact_gap(capsys):
    code, doc = invoke(capsys, "majorize", "0.4,0.4,0.1,0.1", "0.5,0.25,0.25,0")
    assert code == 1
    assert doc["verdict"] is False
    assert doc["gaps"][1] == "-1/20"


def test_majorize_pad_flag(capsys):
    code, _ = invoke(capsys, "majorize", "0.5,0.5", "1,0", "--pad")
    assert code == 0
    code, _ = invoke(capsys, "majorize", "0.5,0.5", "1,0,0")
    assert code == 2  # dimension mismatch without --pad


def test_trump_certificate_roundtrip(capsys):
    code, doc = invoke(capsys, "trump", "0.4,0.4,0.1,0.1", "0.5,0.25,0.25,0", "0.6,0.4")
    assert code == 0
    assert doc["verdict"] is True
    assert reverify_certificate_dict(doc["certificate"])


def test_trump_failure_exits_one(capsys):
    code, doc = invoke(capsys, "trump", "0.4,0.4,0.1,0.1", "0.5,0.25,0.25,0", "0.5,0.5")
    assert code == 1
    assert "certificate" not in doc


def test_classify(capsys):
    code, doc = invoke(capsys, "classify", "0.5,0.25,0.25,0")
    assert code == 0
    assert doc == {"useful": True, "d1": 1, "d2": 1, "l": 2, "m": 3}
    code, doc = invoke(capsys, "classify", "0.5,0.5")
    assert code == 1
    assert doc["useful"] is False


def test_witness(capsys):
    code, doc = invoke(capsys, "witness", "0.5,0.25,0.25,0")
    assert code == 0
    assert doc["witness"] == ["3/8", "3/8", "1/8", "1/8"]
    assert doc["report"]["tight_indices"] == [2]


def test_geo_catalyst(capsys):
    code, doc = invoke(capsys, "geo-catalyst", "3/8,3/8,1/8,1/8", "0.5,0.25,0.25,0")
    assert code == 0
    assert doc["alpha"] == "7/8"
    assert doc["k"] == 10
    assert doc["certificate"]["all_strict"] is True


def test_separate(capsys):
    code, doc = invoke(capsys, "separate", "0.5,0.25,0.25,0")
    assert code == 0
    assert doc["not_majorized"]["verdict"] is False
    assert reverify_certificate_dict(doc["certificate"])


def test_demo_nonuniform(capsys):
    code, doc = invoke(capsys, "demo-nonuniform", "0.6,0.4")
    assert code == 0
    assert doc["y"] == ["3/5", "1/5", "1/5", "0/1"]
    assert doc["x_prime"] == ["81/200", "81/200", "19/200", "19/200"]


def test_find_catalyst_certifies(capsys):
    code, doc = invoke(capsys, "find-catalyst", "0.4,0.4,0.1,0.1", "0.5,0.25,0.25,0",
                       "--kmax", "2", "--restarts", "4", "--seed", "1")
    assert code == 0
    assert doc["status"] == "CertifiedFound"
    assert reverify_certificate_dict(doc["certificate"])


def test_find_catalyst_impossible(capsys):
    code, doc = invoke(capsys, "find-catalyst", "0.6,0.2,0.1,0.1", "0.5,0.3,0.1,0.1",
                       "--kmax", "2", "--restarts", "2")
    assert code == 1
    assert doc["impossible_by_extremes"] is True
    assert doc["status"] == "NotFound"


def test_ray_probe(capsys):
    code, doc = invoke(capsys, "ray-probe", "0.5,0.25,0.25,0", "--k", "1")
    assert code == 0
    assert doc["t"] == "1/2"
    assert doc["ladder"] == [{"k": 1, "t": "1/2", "t_float": 0.5}]


def test_sample_region_writes_files(capsys, tmp_path):
    out = tmp_path / "region.csv"
    code, doc = invoke(capsys, "sample-region", "0.5,0.25,0.25,0",
                       "--n", "6", "--kmax", "2", "--seed", "3",
                       "--out", str(out), "--restarts", "2", "--max-iters", "10")
    assert code == 0
    assert doc["records"] == 6
    assert out.exists()
    assert doc["certificate_files"] == doc["certified"]


def test_normalize_flag(capsys):
    code, doc = invoke(capsys, "majorize", "3,3,2,2", "2,1,1,0", "--normalize")
    assert code == 0
    assert doc["verdict"] is True


def test_vector_document_input(capsys, tmp_path):
    doc_path = tmp_path / "y.json"
    doc_path.write_text(json.dumps({"name": "target",
                                    "components": ["1/2", "1/4", "1/4", "0"]}))
    code, doc = invoke(capsys, "classify", str(doc_path))
    assert code == 0
    assert doc["useful"] is True


@pytest.mark.parametrize("argv", [
    ["majorize", "0.5,0.4", "0.5,0.5"],          # mass missing
    ["majorize", "abc", "0.5,0.5"],              # unparseable
    ["separate", "0.5,0.5"],                     # precondition violated
    ["demo-nonuniform", "0.5,0.5"],              # flat catalyst
    ["geo-catalyst", "0.4,0.4,0.1,0.1", "0.5,0.25,0.25,0"],  # not majorized
    ["no-such-command"],
    [],
])
def test_bad_usage_exits_two(capsys, argv):
    code = run(argv)
    capsys.readouterr()
    assert code == 2


def test_console_entry_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "trumpkit", "classify", "0.5,0.25,0.25,0"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["useful"] is True
