import io
import subprocess
import sys
from pathlib import Path

import pytest

from rsworkbench.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return path
    return _write


def test_eval_and_trace(write):
    system = write("s.system", "background: a b c\na | b -> c\n- | c -> b\n")
    assert run("eval", system, "a") == (0, "b c\n")
    assert run("eval", system, "a b") == (0, "b\n")
    toggle = write("t.system", "background: t\n- | t -> t\n")
    assert run("trace", toggle, "-", "--steps", 3) == (0, "-\nt\n-\nt\n")


def test_tabulate_roundtrip():
    code, out = run("tabulate", GOLDEN / "chain_example.sim2.system")
    assert code == 0
    assert out.startswith("domain: a b N() N(a) N(b) N(a,b)\n")
    assert len(out.splitlines()) == 1 + 64


def test_classify():
    code, out = run("classify", GOLDEN / "negation.strong2.system")
    assert code == 0
    assert out.splitlines() == [
        "nondegenerate: false",
        "maximally_inhibited: false",
        "minimal: true",
        "strictly_minimal: false",
        "reaction_count: 3",
        "distinct_core_count: 3",
    ]


def test_check_fn_exit_codes(write):
    code, out = run("check-fn", GOLDEN / "chain_example.table")
    assert code == 1
    assert "witness: union X=a Y=b element=a" in out
    constant = write("c.table", "domain: a\n- -> a\na -> a\n")
    assert run("check-fn", constant)[0] == 0


@pytest.mark.parametrize("argv,golden", [
    (("construct", "strong2", GOLDEN / "negation.table"), "negation.strong2.system"),
    (("construct", "sim2", GOLDEN / "chain_example.table"), "chain_example.sim2.system"),
    (("construct", "decompose", GOLDEN / "one_reaction.system"), "one_reaction.decompose.txt"),
])
def test_construct_golden(argv, golden):
    assert run(*argv) == (0, (GOLDEN / golden).read_text())


def test_construct_split_outputs(tmp_path):
    c, d = tmp_path / "c.system", tmp_path / "d.system"
    code, out = run("construct", "decompose", GOLDEN / "one_reaction.system",
                    "--out-c", c, "--out-d", d)
    assert code == 0 and out == ""
    assert run("eval", c, "a")[1] == "-\n"
    assert run("eval", d, "-")[1] == "a\n"


def test_construct_encoders_and_strongk():
    code, out = run("construct", "encoder", "--domain", "a")
    assert out == "input: a\noutput: N() N(a)\n- | a -> N(a)\na | - -> N()\n"
    code, out = run("construct", "strong-encoder", "--domain", "a")
    assert out.splitlines()[2:] == ["a | - -> STAR", "- | DIAMOND -> DIAMOND"]
    code, out = run("construct", "strongk", GOLDEN / "negation.table", "--l", 1, "--k", 2)
    assert out == "background: a TX0\nTX0 | a -> a\n- | TX0 -> TX0\na | TX0 -> a\n"
    assert run("construct", "strongk", GOLDEN / "negation.table", "--l", 1, "--k", 3)[0] == 2


def test_construct_rejects_reserved_input(write):
    system = write("r.system", "background: a\na | - -> a\n")
    assert run("construct", "decompose", system)[0] == 0
    assert run("construct", "decompose", GOLDEN / "negation.strong2.system")[0] == 2


def test_verify_sim(write):
    canon = write("canon.system", "background: a b\n- | a b -> a b\na | b -> b\na b | - -> a b\n")
    assert run("verify-sim", GOLDEN / "chain_example.table", canon, "--k", 1)[0] == 0
    code, out = run("verify-sim", GOLDEN / "chain_example.table", canon, "--k", 2)
    assert code == 1 and "holds: false" in out
    strong = GOLDEN / "negation.strong2.system"
    assert run("verify-sim", GOLDEN / "negation.table", strong, "--k", 2, "--strong")[0] == 0
    code, out = run("verify-sim", GOLDEN / "negation.table", strong, "--k", 1, "--strong")
    assert code == 1
    assert "failing_state: -" in out and "failing_step: 1" in out


def test_gen_chain():
    code, out = run("gen-chain", "--domain", "a b", "--order", "a;b;-;a b")
    assert (code, out) == (0, (GOLDEN / "chain_example.table").read_text())
    assert run("gen-chain", "--domain", "a b", "--order", "a;b;-")[0] == 2


@pytest.mark.parametrize("s,sp,text", [(2, 4, "7"), (3, 5, "5"), (2, 2, "1"), (3, 4, "7/3")])
def test_threshold(s, sp, text):
    assert run("threshold", "--s", s, "--sprime", sp) == (0, text + "\n")


def test_threshold_error():
    assert run("threshold", "--s", 1, "--sprime", 3)[0] == 2


def test_counts():
    assert run("count-cores", "--size", 2) == (0, "5\n")
    assert run("count-cores", "--size", 1, "--enumerate") == (0, "- | -\ns0 | -\n- | s0\n3\n")
    assert run("count-systems", "--size", 1, "--enumerate") == (0, "8\n")
    assert run("count-systems", "--size", 3) == (0, "2097152\n")
    assert run("count-systems", "--size", 3, "--enumerate")[0] == 2


def test_nonsim():
    code, out = run("nonsim", GOLDEN / "chain_example.table", "--sprime-size", 2, "--k-set", "2,3,4")
    assert code == 0
    assert out == "k=2: none\nk=3: none\nk=4: none\n"
    code, out = run("nonsim", GOLDEN / "chain_example.table", "--sprime-size", 2, "--k-set", "1,2")
    assert code == 1 and out.startswith("k=1: simulated")


def test_errors_go_to_stderr(write, capsys):
    bad = write("bad.system", "background: a\na | a -> a\n")
    code, out = run("eval", bad, "a")
    assert code == 2 and out == ""
    assert "overlap" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rsworkbench", "threshold", "--s", "2", "--sprime", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "7\n"


def test_stdin_input():
    proc = subprocess.run([sys.executable, "-m", "rsworkbench", "eval", "-", "a"],
                          input="background: a\na | - -> a\n", capture_output=True, text=True)
    assert proc.stdout == "a\n"
