import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from psforest.cli import run
from psforest.embedder import contains_forest
from psforest.forest import parse_forest
from psforest.graph import graph6_decode

FIXTURES = Path(__file__).parent / "fixtures"


def call(argv, stdin=""):
    out = io.StringIO()
    code = run(argv, out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def test_ex():
    code, text = call(["ex", "--forest", "P4,S3", "--n", "26"])
    rec = json.loads(text)
    assert code == 0
    assert rec["value"] == 49 and rec["regime"] == "A" and rec["guaranteed"] is True
    assert rec["threshold_N1"] == 26 and rec["threshold_N2"] == 29 and rec["gamma"] == 3


def test_ex_rational_and_alias():
    code, text = call(["ex", "--paths", "3,3", "--stars", "4", "--n", "20"])
    rec = json.loads(text)
    assert code == 0 and rec["value"] == 46
    assert rec["threshold_N1"] == "91/2"
    assert not any(isinstance(v, float) for v in rec.values())


def test_ex_uncovered():
    code, text = call(["ex", "--forest", "P6,S3", "--n", "40"])
    rec = json.loads(text)
    assert code == 0 and rec["value"] is None and rec["regime"] == "uncovered"


def test_oracle():
    code, text = call(["oracle", "--forest", "P4", "--n", "5"])
    rec = json.loads(text)
    assert code == 0 and rec["max_edges"] == 4 and rec["extremal_count"] == 2
    assert len(rec["graph6"]) == 2 and rec["nodes_explored"] > 0


def test_oracle_limit_is_usage_error():
    assert call(["oracle", "--forest", "P4", "--n", "9"])[0] == 2


def test_check_stdin_and_file():
    c7 = (FIXTURES / "c7.g6").read_text()
    assert call(["check", "--forest", "S3"], stdin=c7) == (0, "absent\n")
    assert call(["check", "--forest", "P7", str(FIXTURES / "c7.g6")]) == (0, "present\n")
    code, text = call(["check", "--forest", "P3", "--format", "json"], stdin="Bw\n@\n")
    recs = [json.loads(line) for line in text.splitlines()]
    assert [r["verdict"] for r in recs] == ["present", "absent"]
    assert call(["check", "--forest", "S3"], stdin="B!\n")[0] == 2


def test_construct():
    code, text = call(["construct", "--forest", "P4,S4", "--n", "11"])
    lines = text.split()
    assert code == 0 and len(lines) == 3
    f = parse_forest("P4,S4")
    for line in lines:
        g = graph6_decode(line)
        assert g.edge_count == 19 and contains_forest(g, f) is None
    assert call(["construct", "--forest", "P6,S3", "--n", "40"])[0] == 2


def test_table():
    code, text = call(["table", "--forest", "P4,S3", "--n-range", "24..27"])
    rows = text.splitlines()
    assert code == 0 and rows[0] == "n,value,regime,guaranteed"
    assert rows[3] == "26,49,A,true" and rows[2].endswith(",false")
    assert len(rows) == 5


def test_byte_stable():
    argv = ["construct", "--forest", "P4,P2,S3", "--n-range", "30..33", "--format", "json"]
    assert call(argv) == call(argv)


@pytest.mark.parametrize("argv", [
    ["ex", "--n", "5"],
    ["ex", "--forest", "P1", "--n", "5"],
    ["ex", "--forest", "P4", "--n-range", "9..3"],
    ["ex", "--forest", "P4", "--paths", "4", "--n", "5"],
    ["frobnicate"],
    ["verify", "--only", "12"],
])
def test_usage_errors(argv):
    assert call(argv)[0] == 2


def test_verify_subset():
    code, text = call(["verify", "--only", "6,9"])
    rep = json.loads(text)
    assert code == 0 and rep["passed"] is True
    assert [c["number"] for c in rep["criteria"]] == [6, 9]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "psforest", "ex", "--forest", "P4", "--n", "5"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["value"] == 4
