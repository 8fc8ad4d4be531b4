import pytest
from hypothesis import given, strategies as st

from alphaspec.families import star, t_supertree
from alphaspec.hypergraph import (
    DuplicateEdge,
    EdgeArity,
    ParseError,
    VertexRange,
    build,
    degrees,
    is_connected,
    is_supertree,
    read_text,
    write_text,
)


def test_build_single_edge():
    H = build(3, 3, [{0, 1, 2}])
    assert H.m == 1
    assert H.edges == ((0, 1, 2),)


def test_build_canonical_order():
    H = build(5, 3, [[4, 3, 0], [2, 0, 1]])
    assert H.edges == ((0, 1, 2), (0, 3, 4))
    assert degrees(H)[0][0] == 2


@pytest.mark.parametrize(
    "n, k, edges, exc",
    [
        (3, 3, [[0, 1, 1]], EdgeArity),
        (4, 3, [[0, 1]], EdgeArity),
        (3, 3, [[0, 1, 3]], VertexRange),
        (4, 3, [[0, 1, 2], [2, 1, 0]], DuplicateEdge),
        (3, 3, [], EdgeArity),
    ],
)
def test_build_errors(n, k, edges, exc):
    with pytest.raises(exc):
        build(n, k, edges)


def test_degrees():
    deg, seq = degrees(build(3, 3, [[0, 1, 2]]))
    assert deg == [1, 1, 1] and sum(deg) == 3
    assert degrees(star(13, 3))[1] == (13,) + (1,) * 26
    assert degrees(t_supertree(1, 2, 9, 3)[0])[1] == (10, 3, 2) + (1,) * 24


def test_connectivity():
    assert is_connected(build(3, 3, [[0, 1, 2]]))
    assert not is_connected(build(6, 3, [[0, 1, 2], [3, 4, 5]]))
    # isolated vertex
    assert not is_connected(build(4, 3, [[0, 1, 2]]))


def test_supertree():
    assert is_supertree(build(3, 3, [[0, 1, 2]]))
    assert not is_supertree(build(4, 3, [[0, 1, 2], [0, 1, 3]]))
    assert is_supertree(star(13, 3)) and star(13, 3).n == 27
    assert not is_supertree(build(6, 3, [[0, 1, 2], [3, 4, 5]]))


def test_text_format():
    assert read_text("3 3 1\n0 1 2\n").edges == ((0, 1, 2),)
    assert write_text(star(2, 3)) == "5 3 2\n0 1 2\n0 3 4\n"
    assert read_text("# comment\n\n5 3 2\n0 1 2\n# mid\n0 3 4\n") == star(2, 3)


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 3 1\n0 1\n", 2),
        ("3 3\n0 1 2\n", 1),
        ("3 3 1\n0 x 2\n", 2),
        ("5 3 1\n2 1 0\n", 2),
        ("5 3 2\n0 1 2\n", 2),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        read_text(text)
    assert info.value.line == line


@st.composite
def hypergraphs(draw):
    k = draw(st.integers(2, 4))
    n = draw(st.integers(k, 8))
    edges = draw(
        st.lists(
            st.lists(st.integers(0, n - 1), min_size=k, max_size=k, unique=True).map(lambda e: tuple(sorted(e))),
            min_size=1,
            max_size=6,
            unique=True,
        )
    )
    return build(n, k, edges)


@given(hypergraphs())
def test_properties(H):
    deg, seq = degrees(H)
    assert sum(deg) == H.m * H.k
    assert list(seq) == sorted(seq, reverse=True)
    assert read_text(write_text(H)) == H
    if is_supertree(H):
        assert is_connected(H)
