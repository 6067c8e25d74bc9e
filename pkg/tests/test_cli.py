import json
import subprocess
import sys

import pytest

from qweyl import tables
from qweyl.cli import main
from qweyl.qpoly import LaurentPoly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_normal_order_text(capsys):
    code, out, _ = run(capsys, "normal-order", "--word", "Dx", "--q")
    assert code == 0
    assert out == "q·xD + 1\n"


def test_normal_order_json_matches_text(capsys):
    _, text, _ = run(capsys, "normal-order", "--word", "DDxx", "--q")
    _, js, _ = run(capsys, "normal-order", "--word", "DDxx", "--q", "--format", "json")
    data = json.loads(js)
    terms = {(i, j): LaurentPoly.from_json(c) for i, j, c in data["terms"]}
    assert str(terms[(2, 2)]) in text and str(terms[(1, 1)]) in text
    assert set(terms) == {(2, 2), (1, 1), (0, 0)}


def test_expand_table1(capsys):
    code, out, _ = run(capsys, "expand", "--word", "xxDxxDDD", "--basis", "power-xd", "--q")
    assert code == 0
    body = tables.golden("table1").splitlines()[1:]
    for row in body:
        assert row in out


def test_expand_json_matches_text(capsys):
    argv = ["expand", "--word", "xxDxxDDD", "--basis", "lah", "--q"]
    _, text, _ = run(capsys, *argv)
    _, js, _ = run(capsys, *argv, "--format", "json")
    data = json.loads(js)
    assert data["q_deformed"] is True and data["basis"] == "lah"
    for k, c in enumerate(data["coefficients"]):
        assert f"k={k}\t{LaurentPoly.from_json(c)}\t" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["normal-order", "--word", "xDy"],
        ["expand", "--word", "xxD", "--basis", "normal"],
        ["expand", "--word", "DxxD", "--basis", "lah"],
        ["enumerate", "--word", "DxxD", "--kind", "forests"],
        ["enumerate", "--kind", "partitions"],
    ],
)
def test_domain_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err and out == ""


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["expand", "--word", "xD", "--basis", "bogus"])
    assert exc.value.code == 2


def test_enumerate_rooks(capsys):
    code, out, _ = run(capsys, "enumerate", "--word", "xxDxxDDD", "--kind", "rooks", "--k", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert sorted(int(line.rsplit("inv=", 1)[1]) for line in lines) == [3, 4, 4, 4]


@pytest.mark.parametrize(
    "kind, k, count",
    [("forests", 2, 5), ("families", 2, 24), ("bcf", 2, 5), ("truncated-rooks", 1, 10)],
)
def test_enumerate_counts(capsys, kind, k, count):
    _, text, _ = run(capsys, "enumerate", "--word", "xxDxxDDD", "--kind", kind, "--k", str(k))
    _, js, _ = run(capsys, "enumerate", "--word", "xxDxxDDD", "--kind", kind, "--k", str(k), "--format", "json")
    assert len(text.strip().splitlines()) == count
    assert len(json.loads(js)) == count


def test_enumerate_partitions(capsys):
    _, out, _ = run(capsys, "enumerate", "--kind", "partitions", "--n", "4", "--k", "2")
    assert "1|234\twt=5" in out
    assert len(out.strip().splitlines()) == 7


def test_enumerate_families_carry_weights_on_complete_graphs(capsys):
    _, js, _ = run(capsys, "enumerate", "--word", "xxxxDDDD", "--kind", "families", "--k", "3", "--format", "json")
    weights = sorted(item["weight"] for item in json.loads(js))
    assert weights == [7, 8, 8, 9, 9, 9, 10, 10, 10, 11, 11, 12]


@pytest.mark.parametrize("name", sorted(tables.TABLES))
def test_table_subcommand(capsys, name):
    code, out, _ = run(capsys, "table", name)
    assert code == 0
    assert out == tables.golden(name)


def test_table_mismatch_exits_1(capsys, monkeypatch):
    monkeypatch.setitem(tables.TABLES, "table1", lambda: "tampered\n")
    code, _, err = run(capsys, "table", "table1")
    assert code == 1
    assert "differs" in err


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bijection", "--max-semilength", "4")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("PASS bcf-bijection")


def test_verify_failure_exits_1(capsys, monkeypatch):
    from qweyl import cli
    from qweyl.report import CheckReport

    def broken(name, max_semilength=None, **kw):
        rep = CheckReport(name)
        rep.record("instance", False, "forced")
        return rep

    monkeypatch.setattr(cli, "run_suite", broken)
    code, out, _ = run(capsys, "verify", "--suite", "classical")
    assert code == 1
    assert "FAIL" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "q-reduction", "--max-semilength", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"] and len(data["instances"]) == 6


def test_output_is_deterministic(capsys):
    argv = ["enumerate", "--word", "xxDxxDDD", "--kind", "families", "--k", "2", "--format", "json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_module_entry_point_cross_oracle():
    proc = subprocess.run(
        [sys.executable, "-m", "qweyl", "verify", "--suite", "cross-oracle", "--max-semilength", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "PASS cross-oracle" in proc.stdout
