"""k-uniform hypergraphs: validation, degrees, connectivity and a plain text format.

Text format::

    # optional comment lines
    n k m
    v_1 v_2 ... v_k        (m edge lines, 0-based, strictly increasing)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class HypergraphError(ValueError):
    """Base class for invalid hypergraph input."""


class EdgeArity(HypergraphError):
    pass


class VertexRange(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class ParseError(HypergraphError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Hypergraph:
    """An immutable simple k-uniform hypergraph on vertices ``0..n-1``.

    ``edges`` is a tuple of sorted vertex tuples, itself sorted
    lexicographically. Use :func:`build` rather than the constructor.
    """

    n: int
    k: int
    edges: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident_edges(self) -> list[list[int]]:
        """Edge indices incident with each vertex, in canonical edge order."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return inc

    def edge_index(self, members: Iterable[int]) -> int:
        return self.edges.index(tuple(sorted(members)))


def build(n: int, k: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and canonicalize a k-uniform hypergraph."""
    if k < 2:
        raise EdgeArity(f"uniformity k must be >= 2, got {k}")
    if n < k:
        raise VertexRange(f"need n >= k, got n={n}, k={k}")
    canon = []
    for raw in edges:
        members = [int(v) for v in raw]
        e = tuple(sorted(set(members)))
        if len(members) != k or len(e) != k:
            raise EdgeArity(f"edge {members} does not have {k} distinct vertices")
        if e[0] < 0 or e[-1] >= n:
            raise VertexRange(f"edge {members} has a vertex outside [0, {n})")
        canon.append(e)
    if not canon:
        raise EdgeArity("a hypergraph needs at least one edge")
    canon.sort()
    for a, b in zip(canon, canon[1:]):
        if a == b:
            raise DuplicateEdge(f"edge {a} appears more than once")
    return Hypergraph(n, k, tuple(canon))


def degrees(H: Hypergraph) -> tuple[list[int], tuple[int, ...]]:
    """Per-vertex degrees and the non-increasing degree sequence."""
    deg = [0] * H.n
    for e in H.edges:
        for v in e:
            deg[v] += 1
    return deg, tuple(sorted(deg, reverse=True))


def is_connected(H: Hypergraph) -> bool:
    """Connectivity of the vertex-edge incidence graph.

    Isolated vertices make the hypergraph disconnected, matching weak
    irreducibility of the associated tensor.
    """
    inc = H.incident_edges()
    seen_v = [False] * H.n
    seen_e = [False] * H.m
    seen_v[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for i in inc[v]:
            if seen_e[i]:
                continue
            seen_e[i] = True
            for u in H.edges[i]:
                if not seen_v[u]:
                    seen_v[u] = True
                    queue.append(u)
    return all(seen_v)


def is_supertree(H: Hypergraph) -> bool:
    # connected + n = m(k-1)+1 is equivalent to acyclic
    return is_connected(H) and H.n == H.m * (H.k - 1) + 1


def write_text(H: Hypergraph) -> str:
    lines = [f"{H.n} {H.k} {H.m}"]
    lines += [" ".join(map(str, e)) for e in H.edges]
    return "\n".join(lines) + "\n"


def read_text(text: str) -> Hypergraph:
    header: Sequence[int] | None = None
    edges: list[list[int]] = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 3:
                raise ParseError("header must be 'n k m'", lineno)
            header = nums
            continue
        if len(nums) != header[1]:
            raise ParseError(f"expected {header[1]} vertices, got {len(nums)}", lineno)
        if any(a >= b for a, b in zip(nums, nums[1:])):
            raise ParseError("edge vertices must be strictly increasing", lineno)
        edges.append(nums)
    if header is None:
        raise ParseError("missing header", lineno)
    n, k, m = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", lineno)
    return build(n, k, edges)
