import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from tabprime.cli import run
from tabprime.tableaux import parse_tableau

GOLDEN = Path(__file__).parent / "golden"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


CASES = [
    ("is_prime.txt", ["is-prime", "[[1,3,5,7],[2,4,6,8]]", "--k", "4", "--n", "8"]),
    ("is_prime.json", ["--json", "is-prime", "[[1,3,5,7],[2,4,6,8]]", "--k", "4", "--n", "8"]),
    ("count_prime_4_8.txt", ["count-prime", "--k", "4", "--n", "8"]),
    ("to_monomial.txt", ["to-monomial", "[[1,2,4,6],[3,5,7,8]]", "--k", "4", "--n", "8"]),
    ("to_monomial.json", ["--json", "to-monomial", "[[1,2,4,6],[3,5,7,8]]", "--k", "4", "--n", "8"]),
    ("factorize_3_9.txt", ["factorize", "[[1,2,3],[4,5,6],[7,8,9]]", "--k", "3", "--n", "9"]),
    ("classify_3_6_prime.txt", ["classify", "--k", "3", "--n", "6", "--cols", "2", "--prime-only"]),
    ("classify_2_4.json", ["--json", "classify", "--k", "2", "--n", "4", "--cols", "2"]),
    ("ch_2_4.txt", ["ch", "[[1,3],[2,4]]", "--k", "2", "--n", "4"]),
    ("orbit.txt", ["orbit", "[[1,3,5,7],[2,4,6,8]]", "--k", "4", "--n", "8"]),
    ("orbit_cover_gr48_nonreal.txt", ["orbit-cover", "--fixtures", "gr48", "--tag", "nonreal"]),
    ("catalog_4_8.txt", ["catalog", "--k", "4", "--n", "8"]),
]


@pytest.mark.parametrize("name,argv", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv):
    code, out, err = call(*argv)
    assert code == 0, err
    assert out == (GOLDEN / name).read_text()


def test_spelled_out_values():
    assert call("count-prime", "--k", "4", "--n", "8")[1].strip() == "122"
    assert call("count-prime", "--k", "5", "--n", "10")[1].strip() == "3457"
    assert call("to-monomial", "[[1,2,4,6],[3,5,7,8]]", "--k", "4", "--n", "8")[1].strip() == \
        "Y[2,-6]*Y[1,-3]*Y[3,-3]*Y[2,0]"
    data = json.loads(call("--json", "is-prime", "[[1,3,5,7],[2,4,6,8]]", "--k", "4", "--n", "8")[1])
    assert data["prime"] is True and data["witness"] == [[1, 4, 5, 8], [2, 3, 6, 7]]


def test_json_flag_after_subcommand():
    a = call("--json", "count-prime", "--k", "4", "--n", "8")[1]
    b = call("count-prime", "--k", "4", "--n", "8", "--json")[1]
    assert a == b and json.loads(a)["prime"] == 122


def test_text_output_reparses():
    code, out, _ = call("to-tableau", "Y[1,-7]*Y[2,-4]*Y[1,-5]*Y[3,-1]*Y[2,-2]*Y[3,1]", "--k", "4", "--n", "8")
    assert code == 0
    assert parse_tableau(out.strip(), 8, 4).columns == ((1, 3, 5, 7), (2, 4, 6, 8))
    code, out, _ = call("promote", "[[1,2]]", "--k", "2", "--n", "4", "--steps", "2")
    assert parse_tableau(out.strip(), 4, 2).columns == ((3, 4),)
    for line in call("orbit", "[[1,3],[2,5]]", "--k", "2", "--n", "5")[1].splitlines():
        parse_tableau(line, 5, 2)


def test_other_subcommands():
    assert call("check-ws", "[1,2]", "[3,4]")[1].strip() == "true"
    assert call("check-noncrossing", "[1,3]", "[2,4]")[1].strip() == "false"
    assert call("reduce", "[[1,3],[2,3]]", "--k", "2", "--n", "4")[1].strip() == "[[1,3]]"
    code, out, _ = call("ch", "[[1,3],[2,4]]", "--k", "2", "--n", "4", "--quotient")
    assert out.strip() == "-1 + P[1,3]*P[2,4]"
    code, out, _ = call("is-prime", "[[1,6,7],[2,5,8],[3,4,9]]", "--k", "3", "--n", "9")
    assert code == 0 and out.startswith("prime = true")


@pytest.mark.parametrize("argv,code", [
    (["factorize", "[[1,2", "--k", "2", "--n", "4"], 2),
    (["factorize", "[[1,2]]", "--k", "3", "--n", "2"], 2),
    (["nosuch"], 2),
    (["count-prime", "--k", "5", "--n", "8"], 4),
    (["is-prime", "[[1,3]]", "--k", "2", "--n", "4"], 4),
    (["factorize", "[[2,1]]", "--k", "2", "--n", "4"], 4),
    (["factorize", "[[1,9]]", "--k", "2", "--n", "4"], 4),
    (["classify", "--k", "3", "--n", "6", "--cols", "3"], 4),
    (["classify", "--k", "6", "--n", "14"], 3),
    (["ch", "[[1,3],[2,4],[3,5],[4,6],[5,7],[6,8],[7,9]]", "--k", "2", "--n", "9"], 3),
])
def test_exit_codes(argv, code, capsys):
    got, out, err = call(*argv)
    assert got == code
    if code != 2 or argv[0] != "nosuch":
        assert out == ""


def test_diagnostic_is_one_line():
    _, _, err = call("count-prime", "--k", "5", "--n", "8")
    assert err.count("\n") == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tabprime", "count-prime", "--k", "2", "--n", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "0"
