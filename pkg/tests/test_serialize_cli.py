import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from dlcoh.cli import main
from dlcoh.partitions import Partition, partitions
from dlcoh.serialize import (
    table_from_csv, table_from_json, table_to_csv, table_to_dict, table_to_json,
)
from dlcoh.sweeps import SweepConfig, run_verify, work_items
from dlcoh.tables import block_table, conja_table, pi_variety_table

P = Partition


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def some_tables():
    yield conja_table(2, 2, P((1,)))
    yield conja_table(1, 2, P())
    yield pi_variety_table(3)
    yield block_table(5, 2, P((2,)))


@pytest.mark.parametrize("table", list(some_tables()), ids=lambda t: f"{t.source}-{t.n}-{t.d}")
def test_round_trips(table):
    assert table_from_json(table_to_json(table)) == table
    assert table_from_csv(table_to_csv(table)) == table


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, n + 1).flatmap(
        lambda d: st.tuples(st.just(d), st.sampled_from(partitions(n + 1 - d)))))))
def test_round_trip_any_conja(args):
    n, (d, mu) = args
    table = conja_table(n, d, mu)
    assert table_from_json(table_to_json(table)) == table
    assert table_from_csv(table_to_csv(table)) == table


def test_json_schema():
    data = table_to_dict(conja_table(2, 2, P((1,))))
    assert data == {
        "n": 2, "d": 2, "mu": [1], "source": "xnd",
        "entries": [
            {"lambda": [1, 1, 1], "degree": 3, "frobenius_exponent": 0, "multiplicity": 1},
            {"lambda": [3], "degree": 6, "frobenius_exponent": 3, "multiplicity": 1},
        ],
    }


def test_csv_layout():
    text = table_to_csv(conja_table(1, 2, P()))
    assert text.splitlines() == [
        "n,d,mu,source,lambda,degree,frobenius_exponent,multiplicity",
        "1,2,,xnd,\"1,1\",1,0,1",
        "1,2,,xnd,2,2,1,1",
    ]


def test_cli_table_xnd(capsys):
    code, out, _ = run_cli(capsys, "table", "xnd", "-n", "2", "-d", "2", "--mu", "1")
    assert code == 0
    assert json.loads(out) == table_to_dict(conja_table(2, 2, P((1,))))


def test_cli_table_pi_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "pi", "-n", "1", "--format", "csv")
    assert code == 0
    assert table_from_csv(out) == pi_variety_table(1)


def test_cli_table_block(capsys):
    code, out, _ = run_cli(capsys, "table", "block", "-n", "3", "-d", "2", "--core", "")
    assert code == 0
    assert table_from_json(out) == block_table(3, 2, P())


@pytest.mark.parametrize("argv", [
    ["table", "xnd", "-n", "2", "-d", "9", "--mu", "1"],
    ["table", "xnd", "-n", "2", "-d", "2"],
    ["table", "xnd", "-n", "2", "-d", "2", "--mu", "2"],
    ["table", "block", "-n", "3", "-d", "2", "--core", "1"],
    ["table", "nope", "-n", "2"],
    ["verify", "triangle", "--max-n", "0"],
    ["verify", "triangle", "--max-n", "3", "--jobs", "0"],
    ["verify", "unknown", "--max-n", "3"],
    [],
])
def test_cli_usage_errors(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 1
    assert out == ""
    assert "error" in err


@pytest.mark.parametrize("suite", ["perv", "triangle", "periodicity", "pi-variety", "block"])
def test_cli_verify_passing_suites(capsys, suite):
    code, out, _ = run_cli(capsys, "verify", suite, "--max-n", "5")
    report = json.loads(out)
    assert code == 0 and report["status"] == "pass"
    assert report["suites"][0]["checked"] > 0


def test_cli_verify_counterexample_exit(capsys):
    code, out, _ = run_cli(capsys, "verify", "uniqueness", "--max-n", "3")
    report = json.loads(out)
    assert code == 2 and report["status"] == "fail"
    assert report["witness"]["suite"] == "uniqueness"
    assert report["witness"]["parameters"] == {"n": 3}


def test_cli_verify_csv(capsys):
    code, out, _ = run_cli(capsys, "verify", "triangle", "--max-n", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "suite,status,items,checked,failed_items"
    assert out.splitlines()[1].startswith("triangle,pass,")


def test_d_range_restricts_work():
    cfg = SweepConfig(max_n=5, d_range=(2, 3))
    assert {item[2] for item in work_items("triangle", cfg)} == {2, 3}
    with pytest.raises(ValueError):
        SweepConfig(max_n=5, d_range=(3, 2))


def test_jobs_do_not_change_reports():
    one = run_verify("all", SweepConfig(max_n=4, jobs=1))
    two = run_verify("all", SweepConfig(max_n=4, jobs=2))
    assert one == two


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dlcoh", "table", "xnd", "-n", "1", "-d", "2", "--mu", ""],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert table_from_json(proc.stdout) == conja_table(1, 2, P())
