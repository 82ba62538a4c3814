import pytest

from neronpy.cli import main
from neronpy.formats import read_graph
from neronpy.graphs import banana_graph, is_isomorphic


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_graph_invariants(data_dir, capsys):
    assert main(["graph-invariants", str(data_dir / "banana.graph")]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "D(G) = 11" in out
    assert "discriminant formula: 11 = 11 OK" in out
    assert "component group = Z/11" in out
    assert "invariant factors = 11" in out
    assert "rank = 2" in out
    assert "m(G) = 2" in out
    assert "regularity = 11/6" in out
    assert "bipartition = {a} | {b}" in out
    assert "leading minors = 3, 11" in out


def test_graph_verify(data_dir, capsys):
    assert main(["graph-verify", str(data_dir / "triangle.graph")]) == 0
    assert capsys.readouterr().out.strip() == "discriminant formula: 3 = 3 OK"


def test_graph_double_cover_to_file(data_dir, tmp_path, capsys):
    out = tmp_path / "cover.graph"
    code = main(["graph-double-cover", str(data_dir / "folded_triple_loop.graph"), "--out", str(out)])
    assert code == 0
    printed = capsys.readouterr().out
    assert "double cover discriminant: 3 = 3 OK" in printed
    assert "FAILED" not in printed
    assert is_isomorphic(read_graph(out), banana_graph())


def test_graph_double_cover_to_stdout(data_dir, tmp_path, capsys):
    assert main(["graph-double-cover", str(data_dir / "banana.graph")]) == 0
    printed = capsys.readouterr().out
    assert "# double cover char poly:" in printed
    cover = read_graph(write(tmp_path, "cover.graph", printed))
    assert cover.num_vertices == 4


def test_phi_ff(data_dir, capsys):
    assert main(["phi-ff", str(data_dir / "degree11.ff")]) == 0
    assert "order = 1895575 = 5^2·11·61·113" in capsys.readouterr().out


def test_phi_q_batch(data_dir, capsys):
    code = main(["phi-q", str(data_dir / "d22_p2.q"), str(data_dir / "d26_p13.q")])
    assert code == 0
    out = capsys.readouterr().out
    assert "order = 1 = 1" in out
    assert "order = 21 = 3·7" in out
    assert out.index("d22_p2.q") < out.index("d26_p13.q")


@pytest.mark.parametrize(
    "text,code",
    [
        ("field q\np 2\ndprime 11\ncharpoly -8 -2 1\n", 2),
        ("field q\np 5\ndprime 2 3\n", 1),
        ("field q\np 2\ndprime 11\nbrandt\n1 1\n3 0\n", 1),
        ("field q\np 2\ndprime 11\n", 1),
        ("hello\n", 3),
    ],
)
def test_phi_q_exit_codes(tmp_path, capsys, text, code):
    assert main(["phi-q", write(tmp_path, "input.q", text)]) == code
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "error" in captured.err


def test_batch_reports_worst_code(data_dir, tmp_path, capsys):
    bad = write(tmp_path, "bad.q", "field q\np 5\ndprime 2 3\n")
    assert main(["phi-q", str(data_dir / "d26_p13.q"), bad]) == 1
    assert "order = 21" in capsys.readouterr().out


def test_wrong_field_is_a_parse_error(data_dir):
    assert main(["phi-ff", str(data_dir / "d26_p13.q")]) == 3


def test_missing_files_and_bad_arguments(tmp_path):
    assert main(["phi-q", str(tmp_path / "missing.q")]) == 3
    assert main(["graph-invariants", str(tmp_path / "missing.graph")]) == 3
    assert main(["frobnicate"]) == 3
    assert main([]) == 3
    assert main(["selftest", "--seed", "-1"]) == 3


def test_disconnected_graph_is_a_validation_error(tmp_path):
    path = write(tmp_path, "two.graph", "vertex a 1\nvertex b 1\n")
    assert main(["graph-invariants", path]) == 1


@pytest.mark.parametrize("command", ["reproduce-paper", "reproduce"])
def test_reproduce_quick(capsys, command):
    assert main([command, "--quick"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out
    assert "FAIL" not in out


@pytest.mark.slow
def test_selftest(capsys):
    assert main(["selftest", "--seed", "3"]) == 0
    assert "FAIL" not in capsys.readouterr().out


def _bad_charpoly(rng):
    # d = 22: h(11) = 2 and N = 3, so any monic quadratic without root 3
    r1, r2 = (int(r) for r in rng.choice([v for v in range(-9, 10) if v != 3], size=2))
    return f"field q\np 2\ndprime 11\ncharpoly {r1 * r2} {-(r1 + r2)} 1\n", 2


def _bad_row_sums(rng):
    while True:
        rows = rng.integers(0, 4, size=(2, 2))
        if any(row.sum() != 3 for row in rows):
            break
    body = "\n".join(" ".join(str(int(v)) for v in row) for row in rows)
    return f"field q\np 2\ndprime 11\nbrandt\n{body}\n", 1


def _even_dprime(rng):
    size = 2 * int(rng.integers(1, 3))
    primes = [int(l) for l in rng.choice([3, 5, 7, 11, 13, 17, 19, 23], size=size, replace=False)]
    return f"field q\np 2\ndprime {' '.join(map(str, primes))}\n", 1


def _bad_ff_charpoly(rng):
    c = int(rng.choice([v for v in range(-20, 21) if v != 3]))
    return f"field ff\nq 2\np T+1\ndprime T\ncharpoly {-c} 1\n", 2


@pytest.mark.parametrize("make", [_bad_charpoly, _bad_row_sums, _even_dprime, _bad_ff_charpoly])
def test_invalid_inputs_never_yield_a_report(tmp_path, capsys, rng, make):
    for i in range(20):
        text, code = make(rng)
        command = "phi-ff" if text.startswith("field ff") else "phi-q"
        assert main([command, write(tmp_path, f"input{i}", text)]) == code, text
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "error" in captured.err
