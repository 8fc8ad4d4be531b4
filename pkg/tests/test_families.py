from itertools import combinations_with_replacement, product

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from alphaspec.families import (
    BadParams,
    DegreeClass,
    InfeasibleSequence,
    NotATree,
    TooLarge,
    bfs_order_ok,
    bfs_supertree,
    canonical_form,
    double_star,
    double_star_roles,
    enumerate_degree_classes,
    enumerate_supertrees,
    is_isomorphic,
    power_of_tree,
    star,
    t_supertree,
    top_eight,
    triple_star,
)
from alphaspec.hypergraph import build, degrees, is_supertree


def incidence_graph(H):
    G = nx.Graph()
    G.add_nodes_from((("v", v) for v in range(H.n)), kind="v")
    for i, e in enumerate(H.edges):
        G.add_node(("e", i), kind="e")
        G.add_edges_from((("e", i), ("v", v)) for v in e)
    return G


def nx_isomorphic(G, H):
    return G.k == H.k and nx.is_isomorphic(
        incidence_graph(G), incidence_graph(H), node_match=lambda a, b: a["kind"] == b["kind"]
    )


def naive_supertrees(m, k):
    """Every labelled way of growing m edges, deduplicated with networkx."""
    level = [build(k, k, [range(k)])]
    for _ in range(m - 1):
        grown = []
        for H in level:
            for v in range(H.n):
                G = build(H.n + k - 1, k, list(H.edges) + [[v, *range(H.n, H.n + k - 1)]])
                if not any(nx_isomorphic(G, J) for J in grown):
                    grown.append(G)
        level = grown
    return level


def test_power_of_tree():
    H = power_of_tree([(0, 1), (1, 2)], 3)
    assert H.n == 5 and H.m == 2 and is_supertree(H)
    assert degrees(H)[1] == (2, 1, 1, 1, 1)
    with pytest.raises(NotATree):
        power_of_tree([(0, 1), (1, 2), (2, 0)], 3)


def test_star_and_double_star():
    assert star(2, 3).edges == ((0, 1, 2), (0, 3, 4))
    assert degrees(star(13, 3))[1][0] == 13
    assert degrees(double_star(1, 11, 3))[1][:3] == (12, 2, 1)
    assert is_isomorphic(double_star(0, 4, 3), star(5, 3))
    H, roles = double_star_roles(3, 9, 3)
    deg = degrees(H)[0]
    assert deg[roles.vertices["u1"]] == 4 and deg[roles.vertices["u2"]] == 10


def test_triple_star_roles():
    H, roles = triple_star(10, 0, 1, 3)
    deg = degrees(H)[0]
    assert [deg[roles.vertices[u]] for u in ("u1", "u2", "u3")] == [11, 2, 2]
    assert H.edges[roles.edges["e1"]] == tuple(sorted(H.edges[roles.edges["e1"]]))
    assert roles.vertices["u2"] in H.edges[roles.edges["e1"]]
    assert roles.vertices["u2"] in H.edges[roles.edges["e2"]]
    assert len(roles.pendants["u1"]) == 10 and len(roles.pendants["u3"]) == 1


def test_t_supertree():
    H, roles = t_supertree(1, 2, 9, 3)
    assert H.m == 13
    assert degrees(H)[1][:3] == (10, 3, 2)
    assert set(roles.vertices.values()) <= set(H.edges[roles.edges["e1"]])
    with pytest.raises(BadParams):
        t_supertree(1, 1, 1, 2)


def test_top_eight_sequences():
    expected = [
        (13,), (12, 2), (11, 3), (11, 2, 2), (11, 2, 2), (11, 2, 2), (10, 4), (10, 3, 2),
    ]
    got = [tuple(d for d in degrees(H)[1] if d > 1) for _, H in top_eight(13, 3)]
    assert got == expected
    assert all(H.m == 13 and is_supertree(H) for _, H in top_eight(13, 4))
    with pytest.raises(BadParams):
        top_eight(6, 3)


def test_bfs_supertree_examples():
    H = bfs_supertree((10, 3, 2), 3)
    assert is_isomorphic(H, t_supertree(1, 2, 9, 3)[0])
    assert is_isomorphic(bfs_supertree((11, 2, 2), 3), t_supertree(1, 1, 10, 3)[0])
    assert is_isomorphic(bfs_supertree((13,), 3), star(13, 3))
    assert bfs_order_ok(H)
    with pytest.raises(InfeasibleSequence):
        DegreeClass((3, 1))


def test_bfs_order_rejects_bad_labelling():
    # the root's neighbourhood is numbered after a deeper vertex
    H = build(7, 3, [[0, 1, 2], [2, 5, 6], [0, 3, 4]])
    assert not bfs_order_ok(H)


def test_degree_classes():
    assert [c.degrees for c in enumerate_degree_classes(4)] == [(4,), (3, 2), (2, 2, 2)]
    assert len(enumerate_degree_classes(13)) == 77
    assert DegreeClass((10, 3, 2)).m == 13
    assert DegreeClass((3, 2)).full_sequence(3) == (3, 2) + (1,) * 7


@pytest.mark.parametrize("m", range(1, 11))
def test_degree_classes_match_bruteforce(m):
    brute = set()
    for size in range(0, m):
        for combo in combinations_with_replacement(range(2, m + 1), size):
            if 1 + sum(d - 1 for d in combo) == m:
                brute.add(tuple(sorted(combo, reverse=True)))
    got = [c.degrees for c in enumerate_degree_classes(m)]
    assert len(got) == len(set(got))
    assert set(got) == brute
    assert got[0] == (m,) if m > 1 else True


@pytest.mark.parametrize("m, k", [(1, 3), (2, 3), (3, 3), (4, 3), (5, 3), (4, 4), (5, 4)])
def test_supertree_enumeration_matches_networkx(m, k):
    ours = enumerate_supertrees(m, k)
    ref = naive_supertrees(m, k)
    assert len(ours) == len(ref)
    assert all(any(nx_isomorphic(H, J) for J in ref) for H in ours)


def test_enumeration_counts_and_limits():
    assert [len(enumerate_supertrees(m, 3)) for m in (1, 2, 3, 4, 5)] == [1, 1, 2, 4, 8]
    with pytest.raises(TooLarge):
        enumerate_supertrees(7, 3)


@pytest.mark.parametrize("m, k", [(3, 3), (4, 3), (5, 3), (5, 4)])
def test_canonical_form_agrees_with_networkx(m, k):
    ref = naive_supertrees(m, k)
    for G, H in product(ref, repeat=2):
        assert (canonical_form(G) == canonical_form(H)) == (G is H)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 20), min_size=1, max_size=12), st.integers(3, 4), st.randoms())
def test_canonical_form_is_label_invariant(parents, k, rnd):
    # grow a random supertree, then relabel vertices and reorder edges
    edges = [list(range(k))]
    n = k
    for p in parents:
        edges.append([p % n, *range(n, n + k - 1)])
        n += k - 1
    perm = list(range(n))
    rnd.shuffle(perm)
    G = build(n, k, edges)
    H = build(n, k, [[perm[v] for v in e] for e in reversed(edges)])
    assert canonical_form(G) == canonical_form(H)
    assert bfs_order_ok(bfs_supertree(DegreeClass(tuple(d for d in degrees(G)[1] if d > 1)), k))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(2, 6), max_size=5), st.integers(3, 5))
def test_bfs_supertree_realizes_class(degs, k):
    pi = DegreeClass(tuple(degs))
    H = bfs_supertree(pi, k)
    assert is_supertree(H) and H.m == pi.m
    assert degrees(H)[1] == pi.full_sequence(k)
    assert bfs_order_ok(H)


def test_constructor_examples():
    assert power_of_tree([(0, 1)], 3).edges == ((0, 1, 2),)
    S14 = power_of_tree([(0, i) for i in range(1, 14)], 3)
    assert is_isomorphic(S14, star(13, 3))
    P4 = power_of_tree([(0, 1), (1, 2), (2, 3)], 3)
    assert P4.n == 7 and degrees(P4)[1] == (2, 2, 1, 1, 1, 1, 1)
    assert star(1, 3).edges == ((0, 1, 2),)
    assert star(5, 4).n == 16 and degrees(star(5, 4))[1] == (5,) + (1,) * 15
    assert degrees(double_star(1, 1, 3))[1][:3] == (2, 2, 1) and double_star(1, 1, 3).m == 3
    assert degrees(double_star(3, 9, 3))[1][:3] == (10, 4, 1)
    assert degrees(triple_star(1, 9, 1, 3)[0])[1][:4] == (11, 2, 2, 1)
    assert triple_star(1, 0, 1, 3)[0].m == 4
    assert degrees(triple_star(1, 0, 1, 3)[0])[1][:4] == (2, 2, 2, 1)
    assert degrees(t_supertree(1, 1, 10, 3)[0])[1][:4] == (11, 2, 2, 1)
    H = t_supertree(2, 2, 2, 3)[0]
    assert H.m == 7 and degrees(H)[1][:4] == (3, 3, 3, 1)


def test_bfs_two_class_is_double_star():
    for m in (4, 7, 13):
        assert is_isomorphic(bfs_supertree((m - 1, 2), 3), double_star(1, m - 2, 3))


def test_top_eight_element_four():
    name, H = top_eight(13, 3)[4]
    assert is_isomorphic(H, triple_star(1, 9, 1, 3)[0])
    assert all(H.n == 27 for _, H in top_eight(13, 3))
    assert len({canonical_form(H) for _, H in top_eight(13, 3)}) == 8


def test_small_classes():
    assert [c.degrees for c in enumerate_degree_classes(2)] == [(2,)]
