import io
import subprocess
import sys

import pytest

from vfolkman.cli import main
from vfolkman.graphcore import complement, complete, cycle, graph6_encode


def run(args, stdin=""):
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    out = io.StringIO()
    try:
        code = main(args, out=out)
    finally:
        sys.stdin = old
    return code, out.getvalue()


def g6(g):
    return graph6_encode(g).decode() + "\n"


def test_props_c5():
    assert run(["props"], "Dhc\n") == (0, "5 5 2 2 2 2 3 10\n")


def test_props_empty_input():
    assert run(["props"], "") == (0, "")


def test_props_parse_error(capsys):
    code, _ = run(["props"], "Dhc\nD?\n")
    assert code == 2 and "line 2" in capsys.readouterr().err


def test_arrows():
    assert run(["arrows", "--pattern", "2,6"], g6(complement(cycle(13)))) == (0, "true\n")
    assert run(["arrows", "--pattern", "3,3"], g6(complete(4))) == (1, "false\n")
    assert run(["arrows", "--universal", "9", "7"], g6(complete(9))) == (0, "true\n")
    assert run(["arrows", "--pattern", "2,2", "--brute"], g6(cycle(5)) + g6(cycle(4))) == (1, "true\nfalse\n")


def test_arrows_bad_pattern():
    assert run(["arrows", "--pattern", "2,,6"], "Dhc\n")[0] == 2
    assert run(["arrows"], "Dhc\n")[0] == 2


def test_canon_invariant():
    a = run(["canon"], "Dhc\n")[1]
    b = run(["canon"], g6(cycle(5).permute([2, 0, 4, 1, 3])))[1]
    assert a == b


def test_maxsubsets():
    assert run(["maxsubsets", "--t", "3"], "Dhc\n") == (0, "{0,1,2,3,4}\n")


def test_encode_decode_roundtrip():
    code, out = run(["encode"], "5 0-1 1-2 2-3 3-4 0-4\n")
    assert (code, out) == (0, "Dhc\n")
    assert run(["decode"], "Dhc\n") == (0, "5 0-1 1-2 2-3 0-4 3-4\n")
    assert run(["encode"], "5 0-9\n")[0] == 2


def test_folkman():
    code, out = run(["folkman", "--pattern", "2,2,6", "--q", "7"])
    assert code == 0 and "exact 17" in out.splitlines()[0]
    code, out = run(["folkman", "--pattern", "7,7", "--q", "7"])
    assert code == 1 and "does not exist" in out
    code, out = run(["folkman", "--pattern", "6,6", "--q", "7"])
    assert code == 0 and "[28, 70]" in out.splitlines()[0]


def test_filter_and_populate():
    text = g6(complete(8)) + g6(complement(cycle(15))) + g6(cycle(5))
    code, out = run(["filter", "--pattern", "2,7", "--q", "8"], text)
    assert code == 0 and len(out.split()) == 1
    assert run(["filter", "--pattern", "2,2", "--q", "3"], "Dhc\nD?\n")[0] == 2
    assert run(["filter", "--pattern", "2,2", "--q", "3", "--lenient"], "Dhc\nD?\n")[0] == 0
    code, out = run(["populate", "--pattern", "2,6", "--q", "7"], g6(complement(cycle(13))))
    assert code == 0 and len(out.split()) == 1


def test_extend_from_maximal():
    code, out = run(["extend", "--pattern", "3", "--q", "7", "--r", "2", "--t", "6",
                     "--from-maximal", "2"], g6(complete(6)))
    assert code == 0 and len(out.split()) == 2
    assert run(["extend", "--pattern", "3", "--q", "7", "--r", "2", "--from-maximal", "4"],
               g6(complete(6)))[0] == 2


def test_pipeline_missing_config():
    assert run(["pipeline", "--config", "does-not-exist.cfg"])[0] == 2


def test_pipeline_writes_report_and_figure(tmp_path):
    code, out = run(["pipeline", "--config", "h226-17-alpha4.cfg", "--out", str(tmp_path)])
    assert code == 0 and "H(2,2,6;7;17)" in out
    assert (tmp_path / "report.tsv").exists() and (tmp_path / "report.png").stat().st_size > 0


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "vfolkman.cli", "props"], input="Dhc\n",
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "5 5 2 2 2 2 3 10\n"


@pytest.mark.parametrize("cmd", ["props", "canon", "decode"])
def test_deterministic(cmd):
    text = g6(cycle(7)) + g6(complement(cycle(9)))
    assert run([cmd], text) == run([cmd], text)


def test_filter_17_vertex_catalog():
    from vfolkman import fixtures
    from vfolkman.canon import canonical_form

    text = "".join(g6(g) for g in fixtures.load_all("catalog17"))
    code, out = run(["filter", "--pattern", "2,2,6", "--q", "7"], text)
    want = sorted(canonical_form(fixtures.load(n)).decode() for n in ("G1", "G2", "G3"))
    assert code == 0 and out.split() == want


def test_fixture_catalog():
    from vfolkman import fixtures

    assert fixtures.available() == ["G1", "G2", "G3", "G4", "G5", "catalog17"]
    with pytest.raises(FileNotFoundError):
        fixtures.load("G9")
