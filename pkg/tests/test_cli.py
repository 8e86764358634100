import io
import json
import subprocess
import sys

import jsonschema
import pytest

from htcuntz import schemas
from htcuntz.cli import main


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv,want", [
    (("classify", "--n", "2", "2 1 -> 1 2"), "T"),
    (("equiv", "--n", "2", "1/3", "2/3"), "true"),
    (("equiv", "--n", "2", "1/3", "1/5"), "false"),
    (("eval", "--n", "2", "21 22 1 -> 1 21 22", "1/4"), "5/8"),
    (("eval", "21 22 1 -> 1 21 22", "--y", "3/4"), "0"),
    (("psi", "21 22 1 -> 1 21 22"), "S[1]S*[22] + S[21]S*[1] + S[22]S*[21]"),
    (("psi", "1 2 -> 1 2"), "1"),
    (("reduce", "11 12 2 -> 11 12 2"), "ε -> ε"),
    (("invert", "21 22 1 -> 1 21 22"), "22 1 21 -> 1 21 22"),
    (("compose", "2 1 -> 1 2", "2 1 -> 1 2"), "ε -> ε"),
    (("embed", "--n", "2", "--k", "2", "1 3 2 -> 1 2 3"), "11 2 12 -> 11 12 2"),
    (("orbit", "0", "--depth", "2"), "0 1/4 1/2 3/4"),
    (("act", "21 22 1 -> 1 21 22", "1/3"), "2/3"),
    (("uimage", "1/3"), "1/4"),
    (("uimage", "2/3", "--x", "0"), "1/2"),
    (("parse", "--kind", "word", "e"), "ε"),
    (("parse", "--kind", "point", "2/4"), "1/2"),
    (("parse", "--kind", "sum", "S[1]S*[1] + S[2]S*[2]"), "1"),
    (("parse", "--kind", "interval", "2/2^2"), "[1/2, 3/4)"),
    (("matrix", "2 1 -> 1 2", "--depth", "1"), "basis: 0 1/2\n0 1 1\n1 0 1"),
])
def test_commands(argv, want):
    code, out, err = run(*argv)
    assert (code, out.strip(), err) == (0, want, "")


@pytest.mark.parametrize("argv,needle", [
    (("parse", "1 3 -> 1 2"), "token 2"),
    (("parse", "1 21 -> 1 2"), "a-column: not maximal"),
    (("parse", "1 12 -> 1 2"), "not prefix-free"),
    (("eval", "2 1 -> 1 2", "3/2"), "outside"),
    (("embed", "2 1 -> 1 2"), "k(n-1)+1"),
    (("equiv", "1/3"), "takes 2"),
    (("parse", "--kind", "sum", "S[1]S*[3]"), "position"),
])
def test_bad_input_exits_2(argv, needle):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and needle in err


def test_unknown_subcommand_exits_2(capsys):
    assert main(["frobnicate"]) == 2
    assert "invalid choice" in capsys.readouterr().err


def test_verify_pass_and_fail():
    code, out, _ = run("verify", "group", "--samples", "50", "--n", "2")
    assert code == 0 and out.startswith("group n=2: pass")
    assert run("verify", "iota", "--n", "2", "--k", "3")[0] == 0
    assert run("verify", "crho", "--n", "3")[0] == 0
    code, out, _ = run("verify", "intertwine", "--x", "1/3", "--samples", "40")
    assert code == 1 and "minimal failing input" in out
    assert run("verify", "intertwine", "--x", "1/3", "--samples", "40", "--anchor", "coding")[0] == 0
    assert run("verify", "nonsense")[0] == 2


def test_batch_mode():
    code, out, err = run("classify", stdin="2 1 -> 1 2\n\n12 11 2 -> 11 12 2\n")
    assert (code, out.split(), err) == (0, ["T", "V"], "")
    code, out, _ = run("equiv", stdin="1/3; 2/3\n1/3;1/5\n")
    assert out.split() == ["true", "false"]
    code, out, err = run("classify", stdin="2 1 -> 1 2\noops\n")
    assert code == 2 and out.split() == ["T"] and "->" in err


def test_output_is_deterministic():
    argv = ("verify", "psi", "--samples", "30", "--n", "3", "--seed", "5")
    assert run(*argv) == run(*argv)
    assert run("orbit", "3/7", "--depth", "3") == run("orbit", "3/7", "--depth", "3")


@pytest.mark.parametrize("argv,schema", [
    (("parse", "--json", "21 22 1 -> 1 21 22"), "table"),
    (("compose", "--json", "21 22 1 -> 1 21 22", "2 1 -> 1 2"), "table"),
    (("embed", "--json", "--n", "3", "--k", "2", "2 3 4 5 1 -> 1 2 3 4 5"), "table"),
    (("parse", "--json", "--kind", "plmap", "21 22 1 -> 1 21 22"), "plmap"),
    (("parse", "--json", "--kind", "interval", "--n", "3", "5/3^2"), "interval"),
    (("psi", "--json", "21 22 1 -> 1 21 22"), "sum"),
    (("parse", "--json", "--kind", "sum", "-1/2*S[1]S*[2] + 3"), "sum"),
    (("orbit", "--json", "1/5", "--n", "3"), "orbit"),
    (("matrix", "--json", "21 22 1 -> 1 21 22", "--x", "1/3", "--depth", "2"), "matrix"),
])
def test_json_matches_schema(argv, schema):
    code, out, _ = run(*argv)
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, schemas.BY_NAME[schema])


def test_round_trip_through_cli():
    text = "22 1 21 -> 1 21 22"
    code, out, _ = run("parse", text)
    assert out.strip() == text
    assert run("parse", out.strip())[1] == out
    s = run("psi", text)[1].strip()
    assert run("parse", "--kind", "sum", s)[1].strip() == s


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "htcuntz.cli", "classify", "2 1 -> 1 2"],
                          capture_output=True, text=True)
    assert (proc.returncode, proc.stdout) == (0, "T\n")
