import io
import json
import subprocess
import sys

import pytest

from coinvariants import cli


def run(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_dim_example():
    assert run("dim", "--group", "dihedral", "--n", "6", "--k", "3", "--j", "0")[:2] == (0, "142\n")


def test_cyclic_hilb_example():
    assert run("hilb", "--group", "cyclic", "--n", "3", "--k", "1", "--j", "0")[1] == "1 + q + q^2\n"


def test_catalan_example():
    code, out, _ = run("catalan", "--n", "4", "--k", "2", "--j", "0")
    assert code == 0
    assert out.strip() == "q*t + q^4 + q^3*t + q^2*t^2 + q*t^3 + t^4"


def test_char_with_expansion():
    code, out, _ = run("char", "--n", "3", "--k", "2", "--j", "0", "--expand")
    lines = out.splitlines()
    assert lines[0] == "chi1 + s(1,1)*chi2 + s(3)*chi2 + s(1)*chi^1 + s(2)*chi^1"
    assert "q*t: chi2 + chi^1" in lines
    assert "1: chi1" in lines


def test_basis_text():
    code, out, _ = run("basis", "--n", "3", "--k", "0", "--j", "1")
    assert out.split("\n")[:4] == ["1", "t1_1", "t2_1", "t1_1 t2_1"]


@pytest.mark.parametrize(
    "argv",
    [
        ["dim", "--n", "1"],
        ["dim", "--n", "0", "--group", "cyclic"],
        ["dim", "--n", "3", "--k", "-1"],
        ["hilb", "--n", "three"],
        ["frobnicate"],
        [],
        ["catalan", "--group", "cyclic", "--n", "3"],
        ["verify", "--n", "3", "--k", "1", "--j", "0", "--degree-cap", "3"],
        ["verify", "--n", "3-2"],
        ["verify", "--n", "a-b"],
    ],
)
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 1 and out == "" and err.startswith("coinv: error:")


@pytest.mark.parametrize(
    "argv",
    [
        ["char", "--n", "4", "--k", "2", "--j", "1", "--expand"],
        ["hilb", "--n", "5", "--k", "1", "--j", "2"],
        ["dim", "--n", "5", "--k", "3", "--j", "1"],
        ["basis", "--n", "3", "--k", "1", "--j", "1"],
        ["catalan", "--n", "6", "--k", "2", "--j", "0"],
        ["verify", "--n", "2-3", "--k", "1", "--j", "0,1", "--samples", "5"],
        ["hilb", "--group", "cyclic", "--n", "4", "--k", "2", "--j", "1"],
    ],
)
def test_json_roundtrip_is_byte_identical(argv):
    code, out, _ = run(*argv, "--format", "json")
    assert code == 0
    text = out.rstrip("\n")
    assert cli.dumps(json.loads(text)) == text
    assert "." not in json.dumps([v for v in _numbers(json.loads(text))])


def _numbers(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _numbers(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _numbers(v)
    elif isinstance(obj, (int, float)) and not isinstance(obj, bool):
        yield obj


@pytest.mark.parametrize("group,n", [("dihedral", n) for n in range(2, 6)] + [("cyclic", n) for n in range(1, 5)])
@pytest.mark.parametrize("k,j", [(0, 0), (1, 0), (2, 1), (1, 3)])
def test_dim_equals_hilb_at_ones(group, n, k, j):
    args = ["--group", group, "--n", str(n), "--k", str(k), "--j", str(j), "--format", "json"]
    dim = json.loads(run("dim", *args)[1])["dimension"]
    hilb = json.loads(run("hilb", *args)[1])
    assert dim == sum(t["coefficient"] for t in hilb["terms"])


def test_verify_passes():
    code, out, _ = run("verify", "--n", "2-4", "--k", "0-1", "--j", "0-1", "--samples", "20", "--traces")
    assert code == 0
    assert out.strip().endswith("all checks passed")
    assert out.count("PASS") == 12


def test_verify_reports_mismatch(monkeypatch):
    real = cli.oracle.expected_dims

    def wrong(n, k, j, group="dihedral"):
        dims = dict(real(n, k, j, group))
        dims[(0,) * (k + j)] = 2
        return dims

    monkeypatch.setattr(cli.oracle, "expected_dims", wrong)
    code, out, _ = run("verify", "--n", "3", "--k", "1", "--j", "0", "--samples", "0")
    assert code == 2
    assert "mismatch at (0,): oracle 1, closed form 2" in out
    code, out, _ = run("verify", "--n", "3", "--k", "1", "--j", "0", "--samples", "0", "--format", "json")
    report = json.loads(out)
    assert code == 2 and report["passed"] is False
    assert report["cells"][0]["mismatches"] == [{"closed_form": 2, "multidegree": [0], "oracle": 1}]


def test_verify_parallel_matches_serial(monkeypatch):
    argv = ["verify", "--n", "2-3", "--k", "0-1", "--j", "1", "--samples", "10", "--format", "json"]
    serial = run(*argv)[1]
    monkeypatch.setenv(cli.THREADS_ENV, "2")
    assert run(*argv)[1] == serial


def test_bad_thread_count(monkeypatch):
    monkeypatch.setenv(cli.THREADS_ENV, "zero")
    assert run("verify", "--n", "2", "--k", "1", "--j", "0")[0] == 1


def test_parse_range():
    assert cli.parse_range("2-4,7") == [2, 3, 4, 7]
    assert cli.parse_range("3") == [3]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coinvariants", "dim", "--n", "4", "--k", "1", "--j", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "17\n"
    proc = subprocess.run([sys.executable, "-m", "coinvariants", "dim", "--n", "1"], capture_output=True, text=True)
    assert proc.returncode == 1


def test_help_exits_cleanly():
    assert cli.main(["--help"]) == 0
