import io
import subprocess
import sys

import pytest

from sylowbench.cli import format_table, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_sylow_dodecahedral():
    code, out = run("sylow", "builtin:dodecahedral", "--p", "5", "--tsv")
    assert code == 0
    header, row = out.splitlines()
    fields = dict(zip(header.split("\t"), row.split("\t")))
    assert fields["count"] == "6" and fields["order"] == "120"


def test_prove_contradiction_exit_zero():
    code, out = run("prove", "--p", "17", "--n", "35")
    assert code == 0
    assert out.splitlines()[-1] == "overall\tCONTRADICTION"


def test_scan_flags_22():
    code, out = run("scan", "--p", "3", "--max", "22", "--tsv")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    header = rows[0]
    by_n = {r[0]: dict(zip(header, r)) for r in rows[1:]}
    assert by_n["22"]["status"] == "pseudo-candidate"


def test_scan_extra_file(tmp_path):
    extra = tmp_path / "extra.txt"
    extra.write_text("# n_3 of a simple group\n22\n")
    code, out = run("scan", "--p", "3", "--max", "22", "--extra", str(extra), "--tsv")
    assert code == 0
    assert out.splitlines()[-1].endswith("product-attainable")


def test_info_and_human_alignment():
    code, out = run("info", "builtin:symmetric(4)")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["field", "value"]
    assert lines[0].index("value") == lines[1].index(lines[1].split()[1])


def test_lemmas_pass():
    code, out = run("lemmas", "--suite", "nc", "--max-order", "120", "--tsv")
    assert code == 0
    assert out.splitlines()[0].split("\t") == ["suite", "group", "check", "status", "observed", "expected"]
    assert all("\tPASS\t" in line for line in out.splitlines()[1:])


@pytest.mark.parametrize("argv", [
    ["sylow", "builtin:nope(3)"],
    ["sylow", "builtin:cyclic(4)", "--p", "4"],
    ["scan", "--p", "9", "--max", "10"],
    ["scan", "--p", "3", "--max", "10", "--extra", "/nonexistent/file"],
    ["info", "file:/nonexistent:G"],
    ["--cap-elements", "10", "sylow", "S4"],
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["scan", "--p", "3"], ["lemmas", "--suite", "x"]])
def test_argparse_errors_exit_2(argv):
    with pytest.raises(SystemExit) as err:
        main(argv, io.StringIO())
    assert err.value.code == 2


def test_global_flags_before_or_after():
    a = run("--tsv", "sylow", "S4")
    b = run("sylow", "S4", "--tsv")
    assert a == b and a[0] == 0


def test_verification_failure_exit_1(monkeypatch):
    import sylowbench.cli as cli
    from sylowbench.sylow import SylowReport

    def broken(G, p, caps):
        return SylowReport(p, G.order(), 1, 2, 1, 1, 1)
    monkeypatch.setattr(cli, "count_sylow", broken)
    assert run("sylow", "S3", "--p", "3")[0] == 1


def test_reports_are_byte_deterministic():
    cmd = [sys.executable, "-m", "sylowbench", "lemmas", "--max-order", "60", "--tsv"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_format_table():
    assert format_table(["a", "bb"], [[1, 2]], tsv=True) == "a\tbb\n1\t2\n"
    assert format_table(["a", "bb"], [[100, 2]], tsv=False) == "a    bb\n100  2\n"


def test_selftest_passes():
    code, out = run("selftest", "--tsv")
    assert code == 0
    statuses = {line.split("\t")[3] for line in out.splitlines()[1:]}
    assert statuses <= {"PASS", "SKIP"}
