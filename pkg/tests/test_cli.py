import io
import json
import subprocess
import sys

import pytest

from ramseyclass.catalog import CATALOG, lookup, resolve
from ramseyclass.cli import run
from ramseyclass.hypercore import Hypergraph, parse, serialize


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_density():
    assert call("density", "--kind", "mr", "--input", "K4")[:2] == (0, "5/2\n")
    assert call("density", "--kind", "m", "--input", "K4")[1] == "3/2\n"
    assert call("density", "--kind", "asym", "--input", "K4", "--second", "K3")[1] == "12/5\n"
    code, out, _ = call("--json", "density", "--kind", "delta", "--input", "K3,K3,K3", "--s", "2")
    assert json.loads(out)["delta"] == "2/1"


def test_arrow():
    assert call("arrow", "--host", "K6", "--targets", "K3,K3")[:2] == (0, "ARROWS\n")
    code, out, _ = call("--json", "arrow", "--host", "K5", "--targets", "K3,K3")
    data = json.loads(out)
    assert code == 0 and data["outcome"] == "NOT ARROWS"
    assert len(data["witness"]) == 10 and set(data["witness"][0]) == {"edge", "color"}


def test_unknown_exit_code():
    assert call("arrow", "--host", "K8", "--targets", "K3,K4", "--budget", "5")[0] == 2


def test_contain():
    code, out, _ = call("contain", "--fs", "K5,K2", "--qs", "K3,K3")
    assert code == 0
    head, body = out.split("\n", 1)
    assert head == "DOES NOT HOLD"
    assert len(json.loads(body)) == 4
    code, out, _ = call("--json", "contain", "--fs", "K6", "--qs", "K3,K3")
    assert json.loads(out) == {"holds": True, "certificate": [0, 0], "refutation": []}


def test_contain_hypothesis_error():
    code, _, err = call("contain", "--fs", "K6", "--qs", "P3,K3")
    assert code == 1 and "X_r" in err


def test_other_subcommands():
    assert call("equiv", "--fs", "K3,K4", "--qs", "K4,K3")[1] == "EQUIVALENT\n"
    assert call("ramsey", "--targets", "K3,K3")[1].startswith("6\n")
    assert "Inconclusive" in call("dense", "--t", "K5_3", "--f", "K4_3")[1]
    data = json.loads(call("--json", "classes", "--input", "K6-e")[1])
    assert data["inXr"] and not data["inYr"]
    assert "12/5" in call("asym", "--t", "K4", "--f", "K3", "--heart")[1]
    assert call("cor71", "--item", "i")[1].startswith("item i: separated")
    assert parse(call("sample", "--n", "6", "--p", "1")[1]) == Hypergraph.complete(6)


def test_sweep_and_fit(tmp_path):
    target = tmp_path / "out.csv"
    code, out, _ = call("sweep", "--event", "copy:K3", "--n-list", "8", "--p-grid", "0,1", "--trials", "5",
                        "--output", str(target))
    assert code == 0
    assert out.splitlines()[0] == "n,p,trials,successes,phat"
    assert target.read_text().splitlines()[1:] == ["8,0.0,5,0,0.0", "8,1.0,5,5,1.0"]
    code, out, _ = call("--json", "fit", "--event", "copy:K3", "--n-list", "8,12,16", "--trials", "20")
    data = json.loads(out)
    assert code == 0 and data["predictedSlope"] == -1.0


def test_global_flags_after_subcommand():
    code, out, _ = call("arrow", "--host", "K6", "--targets", "K3,K3", "--json")
    assert json.loads(out)["outcome"] == "ARROWS"


def test_errors_exit_one(tmp_path):
    assert call("nonsense")[0] == 1
    assert call("density")[0] == 1
    assert call("density", "--input", "nope")[0] == 1
    bad = tmp_path / "bad.hg"
    bad.write_text("r=2 n=3\n0 1\n0 7\n")
    code, _, err = call("density", "--input", str(bad))
    assert code == 1 and "line 3" in err
    assert call("sweep", "--event", "foo:K3", "--n-list", "5", "--p-grid", "0")[0] == 1


def test_file_and_name_interchangeable(tmp_path):
    path = tmp_path / "k4.hg"
    path.write_text(serialize(CATALOG["K4"]))
    assert call("density", "--input", str(path))[1] == call("density", "--input", "K4")[1]


def test_catalog_contents():
    names = set(CATALOG)
    assert {f"K{m}" for m in range(2, 9)} <= names
    assert {f"K{m}_3" for m in range(3, 9)} <= names
    assert {"C3", "C4", "C5", "C6", "P2", "P3", "P4", "P5", "K6-e"} <= names
    for name, h in CATALOG.items():
        assert resolve(name) == h
        assert parse(serialize(h)) == h
    assert CATALOG["P4"].n == 4 and CATALOG["P4"].e == 3
    assert CATALOG["K6-e"].e == 14
    assert lookup("K4_2") == CATALOG["K4"]
    code, out, _ = call("catalog")
    assert code == 0 and "K6-e" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ramseyclass", "density", "--input", "K5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3/1\n"
