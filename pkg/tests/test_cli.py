"""Tests for the command-line interface: exit codes, piping, reports."""

import io

import pytest

from isoweave.cli import main
from isoweave.colouring import Striping
from isoweave.design import Design, parse_design, serialise, twill
from isoweave.svg import render_colouring, render_design


def _run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_twill_writes_design_file(capsys):
    code, out, err = _run(capsys, ["twill", "2/1"])
    assert code == 0 and err == ""
    assert out == serialise(twill("2/1"))
    assert parse_design(out) == twill("2/1")


def test_twill_analyze_round_trip(capsys, monkeypatch):
    for spec in ("1/1", "2/1", "3/1/1/2"):
        design_file = serialise(twill(spec))
        code, out, err = _run(capsys, ["analyze"], stdin=design_file, monkeypatch=monkeypatch)
        assert code == 0, err
        assert f"order: {twill(spec).order}" in out
        assert "isonemal: yes" in out
        assert "hangs together: yes" in out


def test_analyze_report_contents(capsys, monkeypatch):
    code, out, _ = _run(
        capsys, ["analyze"], stdin=serialise(twill("2/1")), monkeypatch=monkeypatch
    )
    assert code == 0
    assert "design 3 3" in out
    assert "quarter turns: no" in out
    assert "side-reversing translation: none" in out
    assert "antidiagonal mirror" in out
    assert "antidiagonal glide" in out
    assert "fold=2" in out


def test_hang_reports_loose_fabric(capsys, monkeypatch):
    loose = Design(4, 2, ("#.#.", "##.#"))
    code, out, _ = _run(capsys, ["hang"], stdin=serialise(loose), monkeypatch=monkeypatch)
    assert code == 0
    assert "hangs together: no" in out


def test_check_perfect_striping(capsys, monkeypatch):
    code, out, _ = _run(
        capsys,
        ["check", "--striping", "c=3 warp=0,1,2 weft=1,2,0"],
        stdin=serialise(twill("2/1")),
        monkeypatch=monkeypatch,
    )
    assert code == 0
    assert "perfect: yes" in out
    assert "colour permutations:" in out
    assert "redundancy: 3 cells per period" in out


def test_check_imperfect_striping(capsys, monkeypatch):
    code, out, _ = _run(
        capsys,
        ["check", "--striping", "c=3 warp=0,1,2 weft=2,0,1"],
        stdin=serialise(twill("2/1")),
        monkeypatch=monkeypatch,
    )
    assert code == 0
    assert "perfect: no" in out
    assert "conflict:" in out


def test_search_lists_canonical_stripings(capsys, monkeypatch):
    code, out, _ = _run(
        capsys,
        ["search", "--colours", "3"],
        stdin=serialise(twill("2/1")),
        monkeypatch=monkeypatch,
    )
    assert code == 0
    assert out == "c=3 warp=0,1,2 weft=1,2,0\n"


def test_search_empty_result(capsys, monkeypatch):
    code, out, _ = _run(
        capsys,
        ["search", "--colours", "3"],
        stdin=serialise(twill("1/1")),
        monkeypatch=monkeypatch,
    )
    assert code == 0 and out == ""


def test_search_disjoint_mode(capsys, monkeypatch):
    code, out, _ = _run(
        capsys,
        ["search", "--colours", "4", "--mode", "disjoint"],
        stdin=serialise(twill("3/1")),
        monkeypatch=monkeypatch,
    )
    assert code == 0
    assert out == "c=4 warp=0,1 weft=2,3\n"


def test_place_matches_search(capsys, monkeypatch):
    code, out, _ = _run(
        capsys,
        ["place", "--colours", "3"],
        stdin=serialise(twill("2/1")),
        monkeypatch=monkeypatch,
    )
    assert code == 0
    assert out == "c=3 warp=0,1,2 weft=1,2,0\n"


def test_torus_report(capsys):
    code, out, _ = _run(capsys, ["torus", "--basis", "diag:3,15", "--colours", "3"])
    assert code == 0
    assert "bands per direction: 1" in out
    assert "strands per colour per direction: 1" in out
    assert "crossings per strand: 6" in out
    assert "crossing permutation: (0 1 2 3 4)" in out


def test_torus_square_with_mult(capsys):
    code, out, _ = _run(
        capsys, ["torus", "--basis", "square:10", "--mult", "3", "--colours", "3"]
    )
    assert code == 0
    assert "basis: square:30" in out
    assert "strands per colour per direction: 10" in out
    assert "crossings per strand: 1" in out


def test_torus_validates_against_design(capsys, tmp_path):
    path = tmp_path / "weave.txt"
    path.write_text(serialise(twill("3/7")))
    code, out, _ = _run(
        capsys,
        [
            "torus",
            "--basis",
            "diag:3,5",
            "--colours",
            "3",
            "--design",
            str(path),
            "--striping",
            "c=3 warp=0,1,2 weft=1,2,0",
        ],
    )
    assert code == 1
    assert "period parallelogram of the coloured pattern: no" in out
    assert "inflated: diag:3,15" in out
    assert "colour phase: no" in out


def test_torus_valid_design_basis(capsys, tmp_path):
    path = tmp_path / "weave.txt"
    path.write_text(serialise(twill("3/7")))
    code, out, _ = _run(
        capsys,
        ["torus", "--basis", "diag:3,15", "--colours", "3", "--design", str(path)],
    )
    assert code == 0
    assert "period parallelogram of the coloured pattern: yes" in out
    assert "inflated:" not in out


def test_render_to_stdout(capsys, monkeypatch):
    code, out, _ = _run(
        capsys,
        ["render", "--striping", "c=3 warp=0,1,2 weft=1,2,0"],
        stdin=serialise(twill("2/1")),
        monkeypatch=monkeypatch,
    )
    assert code == 0
    assert out == render_colouring(twill("2/1"), Striping(3, (0, 1, 2), (1, 2, 0)))


def test_render_to_file(capsys, tmp_path, monkeypatch):
    out_path = tmp_path / "figure.svg"
    code, out, _ = _run(
        capsys,
        ["render", "--axes", "--out", str(out_path)],
        stdin=serialise(twill("2/1")),
        monkeypatch=monkeypatch,
    )
    assert code == 0 and out == ""
    from isoweave.svg import RenderOptions

    assert out_path.read_text() == render_design(
        twill("2/1"), RenderOptions(show_axes=True)
    )


def test_usage_errors_exit_two(capsys, monkeypatch):
    with pytest.raises(SystemExit) as excinfo:
        main(["search"])  # missing required --colours
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["no-such-command"])
    assert excinfo.value.code == 2


def test_domain_errors_exit_one(capsys, monkeypatch):
    code, _, err = _run(capsys, ["analyze", "--design", "/no/such/file"])
    assert code == 1 and "error:" in err

    code, _, err = _run(
        capsys, ["analyze"], stdin="design 2 2\n##\n", monkeypatch=monkeypatch
    )
    assert code == 1 and "error:" in err

    code, _, err = _run(capsys, ["torus", "--basis", "oval:3", "--colours", "3"])
    assert code == 1 and "bad basis" in err

    code, _, err = _run(capsys, ["twill", "2/0"])
    assert code == 1 and "error:" in err
