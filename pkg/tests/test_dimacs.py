from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flowdecomp.dimacs import ParseError, format_potential, parse_dimacs, parse_potential, to_dimacs
from flowdecomp.network import Network


def test_single_edge():
    net = parse_dimacs("p max 2 1\nn 1 s\nn 2 t\na 1 2 5\n")
    assert net == Network(2, 0, 1, ((0, 1, 5),))


def test_comments_and_blank_lines():
    text = "c hello\n\np max 3 2\nc mid\nn 3 t\nn 1 s\na 1 2 1\na 2 3 4\n"
    net = parse_dimacs(text)
    assert (net.source, net.sink) == (0, 2)
    assert net.edges[1].capacity == 4


@pytest.mark.parametrize(
    "text, code, line",
    [
        ("p max 2 1\nn 1 s\nn 2 t\na 1 1 3\n", "self-loop", 4),
        ("p max 2 1\nn 1 s\nn 2 t\na 1 2 0\n", "capacity-zero", 4),
        ("p max 2 1\nn 1 s\nn 2 t\na 1 2 4611686018427387905\n", "capacity-bound", 4),
        ("p max 2 1\np max 2 1\n", "duplicate-p", 2),
        ("p max 2 1\nn 2 t\na 1 2 1\n", "missing-source", 3),
        ("p max 2 1\nn 1 s\na 1 2 1\n", "missing-sink", 3),
        ("p max 2 1\nn 1 s\nn 2 t\na 1 3 1\n", "id-range", 4),
        ("p max 2 1\nn 1 s\nn 1 s\n", "duplicate-source", 3),
        ("p max 2 1\nn 1 s\nn 1 t\na 1 2 1\n", "source-is-sink", 1),
        ("a 1 2 1\n", "missing-p", 1),
        ("p max 2 2\nn 1 s\nn 2 t\na 1 2 1\n", "arc-count", 1),
        ("p max 2 1\nn 1 s\nn 2 t\na 1 2 x\n", "syntax", 4),
        ("p min 2 1\n", "syntax", 1),
    ],
)
def test_diagnostics(text, code, line):
    with pytest.raises(ParseError) as exc:
        parse_dimacs(text)
    assert exc.value.code == code
    assert exc.value.line == line


def test_column_points_at_token():
    with pytest.raises(ParseError) as exc:
        parse_dimacs("p max 2 1\nn 1 s\nn 2 t\na 1 2   0\n")
    assert exc.value.column == 9


@st.composite
def networks(draw):
    n = draw(st.integers(2, 7))
    s, t = draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, 2**62)).filter(
                lambda e: e[0] != e[1]
            ),
            max_size=12,
        )
    )
    return Network(n, s, t, tuple(pairs))


@settings(max_examples=200)
@given(networks())
def test_round_trip(net):
    once = parse_dimacs(to_dimacs(net))
    assert once == net
    assert parse_dimacs(to_dimacs(once)) == once


def test_potential_file():
    values = parse_potential("1 1/1\n3 0/1\n2 1/2\n", 3)
    assert values == [Q(1), Q(1, 2), Q(0)]
    assert format_potential(values) == "1 1/1\n2 1/2\n3 0/1\n"


@pytest.mark.parametrize(
    "text, code",
    [("1 1/1\n", "missing-vertex"), ("1 1/1\n1 0/1\n", "duplicate-vertex"), ("4 1/1\n", "id-range"),
     ("1 1/0\n2 0/1\n", "syntax")],
)
def test_potential_file_errors(text, code):
    with pytest.raises(ParseError) as exc:
        parse_potential(text, 2)
    assert exc.value.code == code
