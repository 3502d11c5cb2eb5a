import numpy as np
import pytest

from qkdnoise import load_builtin, load_custom
from qkdnoise.cli import CSV_HEADER, main, parse_grid_list, parse_grid_spec
from qkdnoise.scenarios import ScenarioError


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_grid_spec():
    assert parse_grid_spec("0:1000000:20000") == tuple(20000.0 * i for i in range(51))
    assert parse_grid_spec("0:30:0.5") == tuple(0.5 * i for i in range(61))
    assert parse_grid_spec("5:5:1") == (5.0,)
    # endpoint kept only when it lands within half a step
    assert parse_grid_spec("0:1:0.3") == (0.0, 0.3, 0.6, 0.8999999999999999)
    with pytest.raises(ScenarioError):
        parse_grid_spec("0:10")
    with pytest.raises(ScenarioError):
        parse_grid_spec("0:10:-1")
    with pytest.raises(ScenarioError):
        parse_grid_spec("a:b:c")


def test_parse_grid_list():
    assert parse_grid_list("0,0.025,0.075,0.15,0.3") == (0.0, 0.025, 0.075, 0.15, 0.3)
    with pytest.raises(ScenarioError):
        parse_grid_list("1,zwei,3")


def test_symmetric_row_count(capsys):
    code, out, err = _run(
        capsys,
        "symmetric", "--d", "8", "--k", "2", "--noise", "channel",
        "--grid", "0:1000000:20000", "--runs", "2", "--seed", "42", "--out", "-",
    )
    assert code == 0 and err == ""
    lines = out.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 1 + 51
    assert lines[1].startswith("symmetric,8,2,AB,channel,0,")


def test_symmetric_divisibility_error(capsys):
    code, out, err = _run(
        capsys, "symmetric", "--d", "8", "--k", "3", "--noise", "detector", "--out", "-",
    )
    assert code == 1
    assert "no such built-in dataset" in err


def test_symmetric_grid_list_paper_points(capsys):
    code, out, _ = _run(
        capsys,
        "symmetric", "--d", "2", "--k", "2", "--noise", "isotropic",
        "--grid-list", "0,0.025,0.075,0.15,0.3", "--runs", "2", "--out", "-",
    )
    assert code == 0
    assert len(out.strip().split("\n")) == 1 + 5


def test_asymmetric_row_count_and_validation(capsys, tmp_path):
    out_file = tmp_path / "asym.csv"
    code, _, err = _run(
        capsys,
        "asymmetric", "--d", "4", "--k", "4", "--loss-db", "0:30:0.5",
        "--bob-rate", "160000", "--runs", "2", "--out", str(out_file),
    )
    assert code == 0 and err == ""
    lines = out_file.read_text().strip().split("\n")
    assert len(lines) == 1 + 61

    code, _, err = _run(
        capsys, "asymmetric", "--d", "4", "--k", "4", "--bob-rate", "-5", "--out", "-",
    )
    assert code == 1
    assert "bob-rate" in err


def test_network_rows_per_party(capsys):
    code, out, _ = _run(
        capsys,
        "network", "--f-rate", "0", "--loss-db", "0:30:1", "--runs", "2", "--out", "-",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 1 + 31 * 3
    assert lines[1].split(",")[3] == "Bob1"
    assert lines[2].split(",")[3] == "Bob2"
    assert lines[3].split(",")[3] == "Bob3"
    # party rows carry the block dimensions
    assert lines[3].split(",")[1] == "4" and lines[3].split(",")[2] == "4"


def test_rerun_is_byte_identical(tmp_path, capsys):
    args = [
        "symmetric", "--d", "4", "--k", "2", "--noise", "detector",
        "--grid", "0:400000:100000", "--runs", "20", "--seed", "5",
    ]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes().endswith(b"\n")
    assert b"\r" not in a.read_bytes()


def test_different_seed_changes_output(tmp_path, capsys):
    base = [
        "asymmetric", "--d", "2", "--k", "2", "--loss-db", "5:10:5", "--runs", "10",
        "--bob-rate", "160000",
    ]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(base + ["--seed", "1", "--out", str(a)]) == 0
    assert main(base + ["--seed", "2", "--out", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() != b.read_bytes()


def test_csv_envelope_columns(capsys):
    code, out, _ = _run(
        capsys,
        "asymmetric", "--d", "2", "--k", "2", "--loss-db", "0:10:5",
        "--bob-rate", "320000", "--runs", "15", "--out", "-",
    )
    assert code == 0
    for line in out.strip().split("\n")[1:]:
        fields = line.split(",")
        mean, lo, hi = float(fields[6]), float(fields[7]), float(fields[8])
        assert lo <= mean <= hi


def test_datasets_list(capsys):
    code, out, _ = _run(capsys, "datasets", "list")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 6
    assert lines[0] == "d=2 k=2  comp 2x2, fourier 2x2, duration 25 s"
    assert lines[-1].startswith("network")


def test_datasets_show(capsys):
    code, out, _ = _run(capsys, "datasets", "show", "--d", "2", "--k", "2", "--basis", "comp")
    assert code == 0
    assert [int(v) for v in out.split()] == [10562, 53, 47, 9731]

    code, out, _ = _run(capsys, "datasets", "show", "--d", "8", "--k", "2", "--basis", "fourier")
    assert code == 0
    assert out.split("\n")[0].split()[0] == "9569"

    code, out, _ = _run(capsys, "datasets", "show", "--network", "--basis", "comp")
    assert code == 0
    assert int(out.split("\n")[2].split()[2]) == 10812


def test_datasets_show_unknown(capsys):
    code, _, err = _run(capsys, "datasets", "show", "--d", "9", "--k", "3")
    assert code == 1
    assert "no such built-in dataset" in err


def test_datasets_show_requires_selector(capsys):
    code, _, err = _run(capsys, "datasets", "show")
    assert code == 1
    assert "requires --d and --k" in err


def test_grid_flags_mutually_exclusive(capsys):
    code, _, err = _run(
        capsys,
        "symmetric", "--d", "2", "--k", "2", "--noise", "detector",
        "--grid", "0:10:1", "--grid-list", "0,1", "--out", "-",
    )
    assert code == 1
    assert "mutually exclusive" in err


def test_datasets_export_roundtrip(tmp_path, capsys):
    out_file = tmp_path / "d4k2.txt"
    code, _, _ = _run(
        capsys, "datasets", "show", "--d", "4", "--k", "2", "--export", str(out_file)
    )
    assert code == 0
    record = load_custom(out_file.read_text())
    builtin = load_builtin(4, 2)
    assert np.array_equal(record.comp.counts, builtin.comp.counts)
    assert np.array_equal(record.four.counts, builtin.four.counts)
