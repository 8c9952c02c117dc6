import random

import pytest
from hypothesis import given, strategies as st

from avmlab.errors import FormatError
from avmlab.formats import (format_edgelist, from_graph6, parse_edgelist, read_graphs,
                            to_dot, to_graph6)
from avmlab.generators import FamilySpec, build
from avmlab.graph import Graph, path_graph

from oracles import random_graph


def test_known_graph6_strings():
    # published examples: the empty graph on 0 vertices and K2, P3
    assert to_graph6(Graph(0)) == "?"
    assert to_graph6(Graph(2, ((0, 1),))) == "A_"
    assert to_graph6(path_graph(3)) == "Bg"
    assert to_graph6(Graph(5, tuple((u, v) for u in range(5) for v in range(u + 1, 5)))) == "D~{"
    assert from_graph6(">>graph6<<A_").edges == ((0, 1),)


def test_theta5_graph6():
    assert to_graph6(build(FamilySpec.theta(n=5))) == "D}_"
    assert from_graph6("D}_") == build(FamilySpec.theta(n=5))


def test_large_size_prefix_roundtrip():
    g = Graph(63, ((0, 62), (5, 6)))
    s = to_graph6(g)
    assert s.startswith("~??~")
    assert from_graph6(s) == g


@given(st.integers(0, 20), st.integers(0, 2**31))
def test_graph6_roundtrip(n, seed):
    g = random_graph(random.Random(seed), n, 0.4)
    assert from_graph6(to_graph6(g)) == g
    assert parse_edgelist(format_edgelist(g)) == g


@pytest.mark.parametrize("text", ["", "D}", "D}__", "D} _", "~?", "A\x7f"])
def test_graph6_malformed(text):
    with pytest.raises(FormatError):
        from_graph6(text)


@pytest.mark.parametrize("text,line", [
    ("3 2\n0 1\n", 2),
    ("3 1\n0 1\n1 2\n", 3),
    ("3 1\n1 0\n", 2),
    ("3 1\n0 3\n", 2),
    ("3 2\n0 1\n0 1\n", 3),
    ("3 1\n1 1\n", 2),
    ("x y\n", 1),
    ("# c\n3 1\n0 q\n", 3),
])
def test_edgelist_errors_carry_line(text, line):
    with pytest.raises(FormatError) as info:
        parse_edgelist(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_edgelist_comments_and_blanks():
    g = parse_edgelist("# theta\n\n4 5\n0 1\n0 2\n1 2\n0 3\n1 3\n")
    assert g.m == 5


def test_read_graphs_sniffs_format():
    assert read_graphs("2 1\n0 1\n")[0].m == 1
    gs = read_graphs("D}_\n\nBg\n")
    assert [g.n for g in gs] == [5, 3]
    with pytest.raises(FormatError) as info:
        read_graphs("D}_\nD}\n", "g6")
    assert info.value.line == 2


def test_dot_export():
    text = to_dot(path_graph(3), labels={0: "u"})
    assert text.startswith("graph G {")
    assert '0 [label="u"];' in text and "1 -- 2;" in text
