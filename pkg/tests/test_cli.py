import io
import json
import subprocess
import sys

import pytest

from posbasis.cli import run
from posbasis.construct import BasisFamily
from posbasis.sets import CompactSet


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "argv, want",
    [
        (("dn", "[0,1]", "4"), "5"),
        (("maxdim", "[0,1]", "4"), "3"),
        (("tau", "111"), "4"),
        (("sigma", "01110"), "5"),
        (("lorentz", "2,0,1"), "2"),
        (("lorentz", '["1/4", 0, 1]'), "5"),
        (("nodes", "[0,1]", "3"), "0 1/2 1"),
    ],
)
def test_text_output(argv, want):
    code, out, _ = call(*argv)
    assert code == 0 and out.strip() == want


@pytest.mark.parametrize(
    "argv, code",
    [
        (("dn", "[1,0]", "3"), 1),
        (("dn", "{0} U {1}", "3"), 1),
        (("dn", "[0,1", "3"), 2),
        (("tau", "102"), 2),
        (("lorentz", "0,1"), 1),
        (("lorentz", "1,x"), 2),
        (("interval-basis", "0", "1", "3", "--variant", "left"), 1),
        (("maxdim", "{0} U {1}", "3"), 1),
        (("dn",), 2),
        (("verify", "[0,1]", "{not json"), 2),
    ],
)
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_lorentz_cap_from_env(monkeypatch):
    monkeypatch.setenv("POSBASIS_LORENTZ_CAP", "3")
    code, _, err = call("lorentz", '["1/4", 0, 1]')
    assert code == 1 and "CapExceeded" in err
    assert call("lorentz", '["1/4", 0, 1]', "--cap", "10")[0] == 0


def test_json_outputs_parse():
    code, out, _ = call("profile", "{0} U [1,2] U {3}", "--json")
    data = json.loads(out)
    assert data["lambda"] == 2 and data["theta_left"] == data["theta_right"] == 1
    code, out, _ = call("dn", "{0} U [1,2] U {3}", "5", "--json")
    assert json.loads(out) == {"n": 5, "dn": 6, "branch": "LAMBDA_HALF_ODD"}


def test_basis_json_roundtrip_and_verify(tmp_path):
    code, out, _ = call("basis", "[0,1] U {2} U [3,4]", "4", "--json")
    data = json.loads(out)
    fam = BasisFamily.from_json(data)
    assert fam.to_json() == data
    assert CompactSet.from_json(data["omega_set"]) == fam.omega_set
    path = tmp_path / "fam.json"
    path.write_text(out)
    code, out, _ = call("verify", "[0,1] U {2} U [3,4]", str(path), "--json")
    assert code == 0 and json.loads(out)["verdict"] == "ACCEPT"


def test_verify_inline_list():
    code, out, _ = call("verify", "[-1,1]", '[["1","-2","1"],["1","0","-1"],["1","2","1"]]')
    assert out.strip() == "REJECT: NO_EXACT_NODE"


def test_oracle_subcommands():
    code, out, _ = call("oracle", "tau", "10010110001")
    assert code == 0 and out.strip() == "oracle=12 formula=12 MATCH"
    code, out, _ = call("oracle", "dn", "{0} U [1,2] U {3}", "5", "--json")
    data = json.loads(out)
    assert code == 0 and data["oracle"] == data["formula"] == 6 and data["result"] == "MATCH"


def test_pipe_through_subprocess():
    exe = [sys.executable, "-m", "posbasis.cli"]
    made = subprocess.run([*exe, "basis", "{0} U [1,2] U {3}", "5"], capture_output=True, text=True, check=True)
    checked = subprocess.run([*exe, "verify", "{0} U [1,2] U {3}", "-"], input=made.stdout,
                             capture_output=True, text=True)
    assert checked.returncode == 0 and checked.stdout.strip() == "ACCEPT"
