from pathlib import Path

import pytest

from homfull.cli import main
from homfull.fileio import parse, save
from homfull.graphs import Graph, directed_path, path_graph, relabel


@pytest.fixture
def dp3(tmp_path):
    path = tmp_path / "dp3.txt"
    save(directed_path(3), path)
    return str(path)


def test_recognize_oriented_true(dp3, capsys):
    assert main(["--machine", "recognize", "--kind", "oriented", dp3]) == 0
    assert "VERDICT true" in capsys.readouterr().out


def test_recognize_antisym_false_with_witness(dp3, capsys):
    assert main(["--machine", "recognize", "--kind", "antisym", dp3]) == 1
    out = capsys.readouterr().out
    assert "VERDICT false" in out and "WITNESS (0, 1, 2)" in out


def test_recognize_graph(tmp_path, capsys):
    path = tmp_path / "p3.txt"
    save(path_graph(3), path)
    assert main(["recognize", "--kind", "graph", str(path)]) == 0


def test_kind_file_mismatch(dp3, capsys):
    assert main(["recognize", "--kind", "graph", dp3]) == 2


def test_closure(dp3, capsys):
    assert main(["closure", dp3]) == 0
    out = capsys.readouterr().out
    assert parse(out) == Graph(3, frozenset({(0, 1), (0, 2), (1, 2)}))


def test_core(dp3, capsys):
    assert main(["core", dp3]) == 0
    assert parse(capsys.readouterr().out).n == 3


def test_images(dp3, capsys):
    assert main(["images", "--kind", "antisym", dp3]) == 0
    assert "2 images" in capsys.readouterr().out


def test_construct_dagiso_then_iso(tmp_path, capsys):
    g = directed_path(3)
    h = relabel(g, [2, 0, 1])
    save(g, tmp_path / "g.txt")
    save(h, tmp_path / "h.txt")
    assert main(["construct", "dagiso", str(tmp_path / "g.txt"), str(tmp_path / "h.txt"),
                 "--outdir", str(tmp_path)]) == 0
    assert main(["iso", str(tmp_path / "g_star.txt"), str(tmp_path / "h_star.txt")]) == 0
    star = parse((tmp_path / "g_star.txt").read_text())
    assert star.n == 13


def test_iso_negative(tmp_path):
    save(directed_path(3), tmp_path / "a.txt")
    save(relabel(directed_path(3), [1, 0, 2]), tmp_path / "b.txt")
    save(directed_path(2), tmp_path / "c.txt")
    assert main(["iso", str(tmp_path / "a.txt"), str(tmp_path / "b.txt")]) == 0
    assert main(["iso", str(tmp_path / "a.txt"), str(tmp_path / "c.txt")]) == 1


def test_orient_quasitransitive(tmp_path, capsys):
    save(path_graph(3), tmp_path / "p3.txt")
    assert main(["orient", "quasitransitive", str(tmp_path / "p3.txt")]) == 0
    assert parse(capsys.readouterr().out).arcs == frozenset({(0, 1), (2, 1)})


def test_orient_oclique_none(tmp_path, capsys):
    save(path_graph(4), tmp_path / "p4.txt")
    assert main(["--machine", "orient", "oclique", str(tmp_path / "p4.txt")]) == 1


def test_gen_and_dot(capsys):
    assert main(["gen", "dipath", "-n", "3"]) == 0
    assert parse(capsys.readouterr().out) == directed_path(3)
    assert main(["--format", "dot", "gen", "cycle", "-n", "4"]) == 0
    assert "--" in capsys.readouterr().out


def test_gen_homfull(capsys):
    assert main(["--seed", "5", "gen", "homfull", "-n", "6"]) == 0
    g = parse(capsys.readouterr().out)
    from homfull.recognize import is_hom_full_graph

    assert is_hom_full_graph(g)


def test_gadget_j(capsys):
    assert main(["gadget", "j"]) == 0
    out = capsys.readouterr().out
    assert "roles u=0" in out
    assert parse(out).n == 6


def test_verify_single_theorem(tmp_path, capsys):
    report = tmp_path / "report.txt"
    code = main(["verify", "--theorem", "pinned_examples", "--report", str(report)])
    assert code == 0
    text = report.read_text()
    assert "theorem pinned_examples" in text and "status PASS" in text


def test_verify_unknown_theorem():
    assert main(["verify", "--theorem", "nonsense"]) == 2


def test_usage_error():
    assert main(["recognize"]) == 2


def test_missing_file():
    assert main(["recognize", "--kind", "graph", "/nonexistent/file.txt"]) == 2
