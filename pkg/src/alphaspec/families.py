"""Constructors for the supertree families and exhaustive small-case enumeration.

Every constructor labels vertices deterministically: the named centers
``u1, u2, u3`` come first, then fresh vertices in the order edges are laid
down. Pendent edges contain their center plus ``k - 1`` fresh vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .hypergraph import Hypergraph, build, degrees, is_supertree


class FamilyError(ValueError):
    pass


class BadParams(FamilyError):
    pass


class NotATree(FamilyError):
    pass


class InfeasibleSequence(FamilyError):
    pass


class TooLarge(FamilyError):
    pass


@dataclass(frozen=True)
class Roles:
    """Named vertices and edges of a constructed supertree.

    ``vertices`` maps ``"u1"`` etc. to vertex ids, ``edges`` maps the path or
    core edges (``"e1"``, ``"e2"``) to canonical edge indices, and
    ``pendants`` lists the pendent edge indices hanging at each named vertex.
    """

    vertices: dict[str, int] = field(default_factory=dict)
    edges: dict[str, int] = field(default_factory=dict)
    pendants: dict[str, list[int]] = field(default_factory=dict)


@dataclass(frozen=True)
class DegreeClass:
    """Non-leaf degrees (each >= 2) of a supertree, stored non-increasing."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        if any(d < 2 for d in self.degrees):
            raise InfeasibleSequence(f"non-leaf degrees must be >= 2: {self.degrees}")
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    @property
    def m(self) -> int:
        return 1 + sum(d - 1 for d in self.degrees)

    def full_sequence(self, k: int) -> tuple[int, ...]:
        n = self.m * (k - 1) + 1
        return self.degrees + (1,) * (n - len(self.degrees))


class _Builder:
    def __init__(self, n_named: int, k: int):
        self.k = k
        self.next_vertex = n_named
        self.raw: list[tuple[int, ...]] = []

    def fresh(self, count: int) -> list[int]:
        out = list(range(self.next_vertex, self.next_vertex + count))
        self.next_vertex += count
        return out

    def add(self, *attached: int) -> tuple[int, ...]:
        e = tuple(attached) + tuple(self.fresh(self.k - len(attached)))
        self.raw.append(e)
        return e

    def finish(self) -> Hypergraph:
        return build(self.next_vertex, self.k, self.raw)


def _check_k(k: int) -> None:
    if k < 3:
        raise BadParams(f"supertree families need k >= 3, got {k}")


def power_of_tree(tree: Sequence[tuple[int, int]], k: int) -> Hypergraph:
    """k-th power of an ordinary tree on vertices ``0..t``.

    Original vertices keep their labels; each edge receives ``k - 2`` new
    vertices numbered after them, in edge order.
    """
    _check_k(k)
    t = len(tree)
    if t == 0:
        raise NotATree("tree must have at least one edge")
    pairs = {tuple(sorted(p)) for p in tree}
    if len(pairs) != t or any(a == b for a, b in pairs):
        raise NotATree("repeated edge or loop")
    if any(min(p) < 0 or max(p) > t for p in pairs):
        raise NotATree(f"tree with {t} edges must use vertices 0..{t}")
    adj: dict[int, list[int]] = {v: [] for v in range(t + 1)}
    for a, b in tree:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != t + 1:
        raise NotATree("edge list is not connected")
    b = _Builder(t + 1, k)
    for u, v in tree:
        b.add(u, v)
    return b.finish()


def star(m: int, k: int) -> Hypergraph:
    _check_k(k)
    if m < 1:
        raise BadParams(f"star needs m >= 1, got {m}")
    b = _Builder(1, k)
    for _ in range(m):
        b.add(0)
    return b.finish()


def _double_star(a: int, b: int, k: int) -> tuple[Hypergraph, Roles]:
    _check_k(k)
    if a < 0 or b < 1:
        raise BadParams(f"double star needs a >= 0, b >= 1, got ({a}, {b})")
    bld = _Builder(2, k)
    e1 = bld.add(0, 1)
    pend = {"u1": [bld.add(0) for _ in range(a)], "u2": [bld.add(1) for _ in range(b)]}
    H = bld.finish()
    roles = Roles(
        vertices={"u1": 0, "u2": 1},
        edges={"e1": H.edge_index(e1)},
        pendants={u: [H.edge_index(e) for e in es] for u, es in pend.items()},
    )
    return H, roles


def double_star(a: int, b: int, k: int) -> Hypergraph:
    """S^k_{a,b}: a core edge through u1, u2 with a and b pendent edges."""
    return _double_star(a, b, k)[0]


def double_star_roles(a: int, b: int, k: int) -> tuple[Hypergraph, Roles]:
    return _double_star(a, b, k)


def triple_star(s1: int, s2: int, s3: int, k: int) -> tuple[Hypergraph, Roles]:
    """S^k_{s1,s2,s3}: path edges e1 = u1u2, e2 = u2u3 plus pendent edges."""
    _check_k(k)
    if s1 < 1 or s3 < 1 or s2 < 0:
        raise BadParams(f"triple star needs s1, s3 >= 1 and s2 >= 0, got ({s1}, {s2}, {s3})")
    bld = _Builder(3, k)
    e1 = bld.add(0, 1)
    e2 = bld.add(1, 2)
    pend = {
        "u1": [bld.add(0) for _ in range(s1)],
        "u2": [bld.add(1) for _ in range(s2)],
        "u3": [bld.add(2) for _ in range(s3)],
    }
    H = bld.finish()
    roles = Roles(
        vertices={"u1": 0, "u2": 1, "u3": 2},
        edges={"e1": H.edge_index(e1), "e2": H.edge_index(e2)},
        pendants={u: [H.edge_index(e) for e in es] for u, es in pend.items()},
    )
    return H, roles


def t_supertree(t1: int, t2: int, t3: int, k: int) -> tuple[Hypergraph, Roles]:
    """T(t1,t2,t3): one core edge e1 holding u1, u2, u3, each with pendent edges."""
    _check_k(k)
    if min(t1, t2, t3) < 1:
        raise BadParams(f"T(t1,t2,t3) needs every t_i >= 1, got ({t1}, {t2}, {t3})")
    bld = _Builder(3, k)
    e1 = bld.add(0, 1, 2)
    pend = {
        "u1": [bld.add(0) for _ in range(t1)],
        "u2": [bld.add(1) for _ in range(t2)],
        "u3": [bld.add(2) for _ in range(t3)],
    }
    H = bld.finish()
    roles = Roles(
        vertices={"u1": 0, "u2": 1, "u3": 2},
        edges={"e1": H.edge_index(e1)},
        pendants={u: [H.edge_index(e) for e in es] for u, es in pend.items()},
    )
    return H, roles


def bfs_supertree(pi: DegreeClass | Sequence[int], k: int) -> Hypergraph:
    """The BFS supertree T* with the given non-leaf degrees.

    Greedy layering: the root takes the largest degree, and vertices are
    handed the remaining degrees in the order they were created, so
    vertices of one edge stay consecutive and degrees never increase
    along the ordering.
    """
    _check_k(k)
    if not isinstance(pi, DegreeClass):
        pi = DegreeClass(tuple(pi))
    degs = list(pi.degrees)
    if not degs:
        return star(1, k)
    bld = _Builder(1, k)
    queue: deque[int] = deque()

    def grow(v: int, children: int) -> None:
        for _ in range(children):
            e = bld.add(v)
            queue.extend(e[1:])

    grow(0, degs[0])
    for d in degs[1:]:
        if not queue:
            raise InfeasibleSequence(f"ran out of vertices for degrees {pi.degrees}")
        grow(queue.popleft(), d - 1)
    H = bld.finish()
    assert is_supertree(H)
    return H


def bfs_order_ok(H: Hypergraph, root: int = 0) -> bool:
    """Check that vertex id order is a BFS-ordering rooted at ``root``.

    Tests conditions (i)-(iv): layers non-decreasing, degrees
    non-increasing, parents ordered like children, and the non-parent
    members of each edge contiguous.
    """
    deg, _ = degrees(H)
    inc = H.incident_edges()
    height = [-1] * H.n
    parent = [-1] * H.n
    height[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for i in inc[v]:
            for u in H.edges[i]:
                if height[u] < 0:
                    height[u] = height[v] + 1
                    parent[u] = v
                    queue.append(u)
    order = list(range(H.n))
    if order[0] != root:
        return False
    for u, v in zip(order, order[1:]):
        if height[u] > height[v] or deg[u] < deg[v]:
            return False
        if u != root and v != root and parent[u] > parent[v]:
            return False
    for e in H.edges:
        children = sorted(u for u in e if height[u] == max(height[w] for w in e))
        if children[-1] - children[0] != len(children) - 1:
            return False
    return True


# (name, constructor) pairs for the eight largest, in decreasing order
def top_eight(m: int, k: int) -> list[tuple[str, Hypergraph]]:
    _check_k(k)
    if m < 7:
        raise BadParams(f"the eight named supertrees are distinct only for m >= 7, got {m}")
    return [
        (f"S{m + 1}", star(m, k)),
        (f"S1_{m - 2}", double_star(1, m - 2, k)),
        (f"S2_{m - 3}", double_star(2, m - 3, k)),
        (f"T1_1_{m - 3}", t_supertree(1, 1, m - 3, k)[0]),
        (f"S1_{m - 4}_1", triple_star(1, m - 4, 1, k)[0]),
        (f"S{m - 3}_0_1", triple_star(m - 3, 0, 1, k)[0]),
        (f"S3_{m - 4}", double_star(3, m - 4, k)),
        (f"T1_2_{m - 4}", t_supertree(1, 2, m - 4, k)[0]),
    ]


def _partitions(total: int, largest: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def enumerate_degree_classes(m: int) -> list[DegreeClass]:
    """All non-leaf degree multisets of supertrees with m edges.

    These are the partitions of m - 1, each part shifted up by one, listed
    in reverse lexicographic order (the star class first).
    """
    if m < 1:
        raise BadParams(f"m must be >= 1, got {m}")
    return [DegreeClass(tuple(p + 1 for p in parts)) for parts in _partitions(m - 1, m - 1)]


def _tree_centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def _encode(adj: list[list[int]], kinds: list[str], root: int) -> str:
    # iterative AHU encoding to avoid recursion limits
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    code: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(code[w] for w in adj[v] if w != parent[v])
        code[v] = "(" + kinds[v] + "".join(kids) + ")"
    return code[root]


def canonical_form(H: Hypergraph) -> str:
    """Isomorphism invariant of a supertree.

    The vertex-edge incidence graph of a supertree is an ordinary tree;
    two supertrees are isomorphic exactly when these type-labelled trees
    are, so the centered AHU encoding is a complete invariant.
    """
    if not is_supertree(H):
        raise FamilyError("canonical_form is defined for supertrees only")
    size = H.n + H.m
    adj: list[list[int]] = [[] for _ in range(size)]
    for i, e in enumerate(H.edges):
        for v in e:
            adj[v].append(H.n + i)
            adj[H.n + i].append(v)
    kinds = ["v"] * H.n + ["e"] * H.m
    return f"k{H.k}" + min(_encode(adj, kinds, c) for c in _tree_centers(adj))


def is_isomorphic(G: Hypergraph, H: Hypergraph) -> bool:
    return (G.n, G.k, G.m) == (H.n, H.k, H.m) and canonical_form(G) == canonical_form(H)


MAX_ENUMERATION_EDGES = 6


def enumerate_supertrees(m: int, k: int) -> list[Hypergraph]:
    """One representative per isomorphism class of k-uniform supertrees with m edges.

    Grows supertrees one pendent edge at a time from a single edge and
    deduplicates every generation by canonical form.
    """
    _check_k(k)
    if m < 1:
        raise BadParams(f"m must be >= 1, got {m}")
    if m > MAX_ENUMERATION_EDGES:
        raise TooLarge(f"enumeration is limited to m <= {MAX_ENUMERATION_EDGES}, got {m}")
    level = {canonical_form(star(1, k)): star(1, k)}
    for _ in range(m - 1):
        nxt: dict[str, Hypergraph] = {}
        for H in level.values():
            fresh = list(range(H.n, H.n + k - 1))
            for v in range(H.n):
                G = build(H.n + k - 1, k, list(H.edges) + [[v] + fresh])
                nxt.setdefault(canonical_form(G), G)
        level = nxt
    return [level[key] for key in sorted(level)]
