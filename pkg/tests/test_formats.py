import pytest

from neronpy.errors import GraphValidationError, ParseError
from neronpy.graphs import banana_graph, double_cover, is_isomorphic
from neronpy.homology import discriminant
from neronpy.formats import (
    emit_graph,
    emit_quaternion_input,
    parse_graph,
    parse_quaternion_input,
    read_graph,
    read_quaternion_input,
    render_check,
    render_phi_report,
)
from neronpy.quaternion import FFInput, QInput, phi_ff, phi_q
from neronpy.spectral import Check


def test_read_banana(data_dir):
    g = read_graph(data_dir / "banana.graph")
    assert g.num_vertices == 2
    assert g.num_darts == 6
    assert g.vertex_labels == ("a", "b")
    assert discriminant(g) == 11
    assert is_isomorphic(g, banana_graph(edge_weights=(1, 2, 3)))


def test_folded_loop_record(data_dir):
    g = read_graph(data_dir / "folded_triple_loop.graph")
    assert all(d.is_folded for d in g.darts)


def test_emitted_graph_reads_back(banana):
    g = parse_graph(emit_graph(banana, header="banana"))
    assert g.vertex_weights == banana.vertex_weights
    assert g.darts == banana.darts


def test_emitted_double_cover_reads_back(data_dir):
    g = read_graph(data_dir / "triangle.graph")
    cover, _ = double_cover(g)
    again = parse_graph(emit_graph(cover))
    assert again.vertex_labels == cover.vertex_labels
    assert is_isomorphic(again, cover)


@pytest.mark.parametrize(
    "text,line",
    [
        ("vertex a 1\nedge a a 1\n", 2),
        ("vertex a one\n", 1),
        ("vertex a 1\nvertex a 2\n", 2),
        ("vertex a 1\ndart e f a 1\n", 2),
        ("vertex a 1\ndart e e b 1\n", 2),
        ("# comment\n\nvertex a 1 2\n", 3),
    ],
)
def test_graph_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_pair_weights_must_agree():
    text = "vertex a 1\nvertex b 1\ndart e f a 1\ndart f e b 2\n"
    with pytest.raises(GraphValidationError):
        parse_graph(text)


def test_read_function_field_input(data_dir):
    inp = read_quaternion_input(data_dir / "degree11.ff")
    assert isinstance(inp, FFInput)
    assert inp.q == 2
    assert inp.p.degree == 1
    assert inp.dprime[0].degree == 5
    assert phi_ff(inp).order == 1895575


def test_read_rational_inputs(data_dir):
    inp = read_quaternion_input(data_dir / "d22_p2.q")
    assert isinstance(inp, QInput)
    assert inp.brandt == ((1, 2), (3, 0))
    assert inp.weights == (2, 3)
    assert phi_q(inp).order == 1
    assert phi_q(read_quaternion_input(data_dir / "d26_p13.q")).order == 21


def test_class_number_one_file(data_dir):
    assert phi_ff(read_quaternion_input(data_dir / "class_number_one.ff")).order == 15


def test_quaternion_input_reads_back(data_dir):
    for name in ("degree11.ff", "d22_p2.q", "class_number_one.ff"):
        inp = read_quaternion_input(data_dir / name)
        assert parse_quaternion_input(emit_quaternion_input(inp)) == inp


@pytest.mark.parametrize(
    "text",
    [
        "p 2\ndprime 11\n",
        "field z\np 2\ndprime 11\n",
        "field q\np 2\ndprime 11\ncharpoly 1 x\n",
        "field ff\np T\ndprime T+1\n",
        "field q\nq 2\np 3\ndprime 2\n",
        "field q\np 3\np 5\ndprime 2\n",
        "field q\np 3\ndprime 2\ncolour blue\n",
        "field ff\nq 2\np T\ndprime T^^2\n",
        "field q\np 2\ndprime 11\nbrandt\n1 two\n3 0\n",
        "field q\np 2 3\ndprime 11\n",
        "field ff\nq 2 3\np T\ndprime T+1\n",
    ],
)
def test_quaternion_parse_errors(text):
    with pytest.raises(ParseError):
        parse_quaternion_input(text)


def test_render_phi_report(degree_eleven):
    text = render_phi_report(phi_ff(degree_eleven), title="degree 11")
    lines = text.splitlines()
    assert lines[0] == "degree 11"
    assert lines[1] == "order = 1895575 = 5^2·11·61·113"
    assert "  mass = 31/3" in lines
    assert "  class number = 11" in lines


def test_render_check():
    assert render_check("discriminant formula", Check(11, 11, True)) == "discriminant formula: 11 = 11 OK"
    assert render_check("x", Check(1, 2, False)) == "x: 1 != 2 FAILED"
