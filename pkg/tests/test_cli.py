import pytest

from cutideals import cli
from cutideals.graph import format_graph, complete_graph


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cuts_of_a_path(capsys):
    code, out, _ = run(capsys, "cuts", "path2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# partitions: 4"
    assert lines[1].startswith("q[00]  B=-  size=0")
    assert lines[2] == "q[01]  B=2  size=2  cut=1-2 2-3"


def test_cuts_from_a_file_and_out_dir(capsys, tmp_path):
    path = tmp_path / "k4.graph"
    path.write_text(format_graph(complete_graph(4)))
    code, out, _ = run(capsys, "cuts", str(path), "--out", str(tmp_path / "o"))
    assert code == 0
    assert (tmp_path / "o" / "cuts.txt").read_text() == out


def test_cut_table_limit_is_a_budget_error(capsys, tmp_path):
    path = tmp_path / "big.graph"
    path.write_text("vertices 16\nedge 1 2\n")
    code, _, err = run(capsys, "cuts", str(path))
    assert code == cli.EXIT_BUDGET and "table limit" in err


def test_matrix_for_claw_and_graph(capsys):
    code, out, _ = run(capsys, "matrix", "--claw", "2")
    assert code == 0 and out.startswith("rows 6 cols 4")
    code, out, _ = run(capsys, "matrix", "C3")
    assert code == 0 and out.startswith("rows 6 cols 4")


def test_matrix_needs_an_argument(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["matrix"])
    assert info.value.code == 2


def test_ideal_with_statistics(capsys):
    code, out, _ = run(capsys, "ideal", "C4")
    assert code == 0
    assert "# elements: 3" in out
    assert "minimal_generators = 2:3" in out
    assert "squarefree = true" in out


def test_ideal_with_named_and_explicit_rankings(capsys):
    code, out, _ = run(capsys, "ideal", "C4", "--order", "lex", "--perm", "cut-size")
    assert code == 0 and "# order: lex" in out
    code, out, _ = run(capsys, "ideal", "path2", "--perm", "q[11],q[10],q[01],q[00]")
    assert code == 0 and "# perm: q[11] q[10] q[01] q[00]" in out
    code, out, _ = run(capsys, "ideal", "path2", "--order", "elim:1", "--perm", "3,2,1,0")
    assert code == 0 and "# order: elim:1" in out


def test_ideal_order_search(capsys):
    code, out, _ = run(capsys, "ideal", "C5", "--perm", "search")
    assert code == 0 and "quadratic = true" in out


def test_ideal_order_search_failure_exits_one(capsys):
    code, _, err = run(capsys, "ideal", "K4", "--perm", "search")
    assert code == cli.EXIT_FAIL and "best" in err


@pytest.mark.parametrize("argv", [
    ("ideal", "C4", "--perm", "bogus"),
    ("ideal", "C4", "--order", "elim:x"),
    ("ideal", "C4", "--order", "revlex"),
    ("series", "no_such_graph"),
    ("verify", "everything"),
])
def test_input_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == cli.EXIT_INPUT and err.startswith("input error")


def test_malformed_graph_file_reports_the_line(capsys, tmp_path):
    path = tmp_path / "bad.graph"
    path.write_text("vertices 3\nedge 1 9\n")
    code, _, err = run(capsys, "recognize", str(path))
    assert code == cli.EXIT_INPUT and "line 2" in err


def test_budget_exhaustion_exits_three(capsys):
    code, _, err = run(capsys, "ideal", "C6", "--max-degree", "1")
    assert code == cli.EXIT_BUDGET and err.startswith("budget exceeded")


def test_series_report(capsys):
    code, out, _ = run(capsys, "series", "star3")
    assert code == 0
    assert "h_vector = 1,4,1" in out
    assert "degree = 6" in out and "symmetric = true" in out
    assert "within_bound = true" in out


def test_recognize(capsys):
    code, out, _ = run(capsys, "recognize", "K4")
    assert code == 0 and out.startswith("ring_graph = false")
    code, out, _ = run(capsys, "recognize", "triangle_edge_C4")
    assert "ring_graph = true" in out and "block 1: vertices" in out


def test_verify_formulas(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "formulas", "--out", str(tmp_path))
    assert code == 0
    assert out.splitlines()[-1].startswith("# total")
    assert (tmp_path / "report.txt").read_text() == out


@pytest.mark.parametrize("argv", [("ideal", "C4", "--max-degree", "0"), ("ideal", "C4", "--time-limit", "-1")])
def test_bad_numeric_flags(capsys, argv):
    with pytest.raises(SystemExit) as info:
        cli.main(list(argv))
    assert info.value.code == 2
