import io
import json
import subprocess
import sys

import pytest

from macinterp.cli import run
from macinterp.families import G, member, member_from_dict
from macinterp.identities import REGISTRY, register
from macinterp.report import IdentityReport


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_compute_text():
    code, out, _ = call("compute", "--family", "G", "--index", "1,0")
    assert code == 0 and out.strip() == str(G((1, 0)))


@pytest.mark.parametrize("tag,index", [("G", "1,0"), ("K", "-1,0"), ("Kprime", "0,1"),
                                       ("Ecirc", "2,0"), ("Kplus", "1,1")])
def test_compute_json_round_trip(tag, index):
    code, out, _ = call("compute", "--family", tag, "--index", index, "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert member_from_dict(d) == member(tag, tuple(int(k) for k in index.split(",")))


def test_eval():
    assert call("eval", "--family", "K", "--index", "0,0", "--point", "atau")[:2] == (0, "1\n")
    code, out, _ = call("eval", "--family", "G", "--index", "1,0", "--point", "bar:0,1")
    assert (code, out) == (0, "0\n")
    code, out, _ = call("eval", "--family", "K", "--index", "1,0", "--point", "tilde:0,1",
                        "--scale", "a", "--format", "json")
    assert code == 0 and json.loads(out)["point"] == "tilde:0,1"
    assert call("eval", "--family", "K", "--index", "1,0", "--point", "barinv:1,0")[0] == 0
    assert call("eval", "--family", "K", "--index", "1,0", "--point", "ainvtau")[0] == 0


@pytest.mark.parametrize("argv", [
    ["compute", "--family", "Nope", "--index", "1,0"],
    ["compute", "--family", "G", "--index", "1,x"],
    ["compute", "--family", "Ocirc", "--index", "1,0"],
    ["compute", "--family", "G", "--index", "1,0", "--n", "3"],
    ["eval", "--family", "G", "--index", "1,0", "--point", "bar:1"],
    ["eval", "--family", "G", "--index", "1,0", "--point", "somewhere"],
    ["verify", "no-such-identity"],
    ["suite"],
    ["frobnicate"],
    [],
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and "usage" in err


def test_verify_json():
    code, out, _ = call("verify", "duality", "--n", "2", "--max-weight", "3", "--format", "json")
    assert code == 0
    (rep,) = json.loads(out)
    assert set(rep) == {"identity", "params", "status", "witnesses", "checked", "elapsed_ms"}
    assert rep["status"] == "pass"


def test_injected_false_identity_exits_one():
    def sweep(cfg):
        rep = IdentityReport("false-identity", {})
        rep.record(False, {"i": 1}, "1", "0")
        return [rep]

    register("false-identity", sweep)
    try:
        code, out, _ = call("verify", "false-identity", "duality", "--n", "1")
        code_suite, _, _ = call("suite", "--all", "--n", "1", "--max-weight", "1")
    finally:
        REGISTRY.pop("false-identity")
    assert code == 1 and "FAIL" in out
    assert code_suite == 1


def test_suite_small():
    code, out, _ = call("suite", "--all", "--n", "2", "--max-weight", "2", "--no-timing")
    assert code == 0
    assert out.count("PASS") == len(REGISTRY)


def test_output_file(tmp_path):
    path = tmp_path / "g.json"
    code, out, _ = call("compute", "--family", "G", "--index", "0,1", "--format", "json",
                        "--output", str(path))
    assert code == 0 and out == ""
    assert member_from_dict(json.loads(path.read_text(encoding="utf-8"))) == G((0, 1))


def test_subprocess_determinism():
    argv = [sys.executable, "-m", "macinterp", "verify", "okounkov", "theorem-c",
            "--n", "2", "--max-weight", "2", "--format", "json", "--no-timing"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a
