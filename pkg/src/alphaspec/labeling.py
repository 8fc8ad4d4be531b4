"""Weighted incidence labelings as certificates for rho_alpha.

A labeling B assigns a weight to every incident (vertex, edge) pair. At a
candidate value rho it is

* normal when every vertex sum ``sum_{e ∋ v} (B(v, e) + alpha)`` equals rho
  and every edge product ``prod_{v in e} B(v, e)`` equals ``(1 - alpha)^k``;
* subnormal when sums are <= rho and products >= ``(1 - alpha)^k``, which
  bounds ``rho_alpha(H) <= rho`` (strictly, if some inequality is strict);
* supernormal when sums are >= rho and products <= ``(1 - alpha)^k``; with
  consistency this bounds ``rho_alpha(H) >= rho``.

The module also solves the scalar equations that fix rho_alpha for four
supertree families and lays down the explicit labelings used to separate
neighbouring supertrees in the ordering of the eight largest.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from .families import Roles, double_star, star, t_supertree, triple_star
from .hypergraph import Hypergraph, degrees, is_supertree
from .spectral import _check_alpha, rayleigh


class LabelingError(ValueError):
    pass


class IncompleteLabeling(LabelingError):
    pass


class NonPositiveVector(LabelingError):
    pass


class NoRoot(LabelingError):
    pass


class ConstraintViolated(LabelingError):
    pass


class BadParams(LabelingError):
    pass


SUM_TOL = 1e-8
PRODUCT_TOL = 1e-10
# lemma labelings are tight up to rounding except at one vertex, whose
# deviation can be ~1e-9 at large alpha and k
LEMMA_SUM_TOL = 1e-11
STRICT_FACTOR = 10.0

NORMAL = "normal"
STRICT_SUB = "strictly-subnormal"
STRICT_SUPER = "strictly-supernormal"
SUB = "subnormal-nonstrict"
SUPER = "supernormal-nonstrict"
NONE = "none"


@dataclass(frozen=True)
class WeightedIncidence:
    """Weights ``B[(v, e)]`` keyed by vertex id and canonical edge index."""

    weights: Mapping[tuple[int, int], float]

    def __getitem__(self, key: tuple[int, int]) -> float:
        return self.weights[key]

    def check_complete(self, H: Hypergraph) -> None:
        expected = {(v, i) for i, e in enumerate(H.edges) for v in e}
        keys = set(self.weights)
        if keys != expected:
            missing = sorted(expected - keys)[:3]
            extra = sorted(keys - expected)[:3]
            raise IncompleteLabeling(f"missing pairs {missing}, non-incident pairs {extra}")
        if not all(math.isfinite(w) for w in self.weights.values()):
            raise IncompleteLabeling("labeling contains non-finite weights")


@dataclass(frozen=True)
class CertificateReport:
    classification: str
    vertex_sums: list[float]
    edge_products: list[float]
    target_rho: float
    target_product: float
    max_sum_violation: float
    max_product_violation: float
    consistent: bool

    def as_dict(self) -> dict:
        return {
            "classification": self.classification,
            "target_rho": self.target_rho,
            "target_product": self.target_product,
            "consistent": self.consistent,
            "max_sum_violation": self.max_sum_violation,
            "max_product_violation": self.max_product_violation,
            "vertex_sums": list(self.vertex_sums),
            "edge_products": list(self.edge_products),
        }


def labeling_from_eigenvector(H: Hypergraph, alpha: float, x) -> tuple[float, WeightedIncidence]:
    """B(v, e) = (1 - alpha) x^e / x_v^k, paired with the Rayleigh quotient of x."""
    _check_alpha(alpha)
    x = np.asarray(x, dtype=float)
    if x.shape != (H.n,) or np.any(x <= 0):
        raise NonPositiveVector("labeling needs a strictly positive vector of length n")
    k = H.k
    weights = {}
    for i, e in enumerate(H.edges):
        xe = float(np.prod(x[list(e)]))
        for v in e:
            weights[(v, i)] = (1.0 - alpha) * xe / x[v] ** k
    return rayleigh(H, alpha, x), WeightedIncidence(weights)


def _sums_and_products(H: Hypergraph, alpha: float, B: WeightedIncidence):
    B.check_complete(H)
    sums = [0.0] * H.n
    products = []
    for i, e in enumerate(H.edges):
        p = 1.0
        for v in e:
            w = B[(v, i)]
            sums[v] += w + alpha
            p *= w
        products.append(p)
    return sums, products


def check_consistent(H: Hypergraph, B: WeightedIncidence, tol: float = 1e-9) -> bool:
    """Product of B(v_i, e_i) / B(v_{i-1}, e_i) is 1 around every cycle.

    Equivalent to the existence of potentials phi on vertices and edges
    with ``phi(v) - phi(e) = log B(v, e)`` on every incident pair, which a
    spanning-tree sweep of the incidence graph either builds or refutes.
    Supertrees have no cycles and pass unconditionally.
    """
    B.check_complete(H)
    if is_supertree(H):
        return True
    if any(w <= 0 for w in B.weights.values()):
        return False
    inc = H.incident_edges()
    phi_v: list[float | None] = [None] * H.n
    phi_e: list[float | None] = [None] * H.m
    for start in range(H.n):
        if phi_v[start] is not None:
            continue
        phi_v[start] = 0.0
        queue = deque([("v", start)])
        while queue:
            kind, node = queue.popleft()
            if kind == "v":
                for i in inc[node]:
                    if phi_e[i] is None:
                        phi_e[i] = phi_v[node] - math.log(B[(node, i)])
                        queue.append(("e", i))
            else:
                for u in H.edges[node]:
                    if phi_v[u] is None:
                        phi_v[u] = phi_e[node] + math.log(B[(u, node)])
                        queue.append(("v", u))
    return all(
        abs(phi_v[v] - phi_e[i] - math.log(B[(v, i)])) <= tol
        for i, e in enumerate(H.edges)
        for v in e
    )


def _report(H, alpha, rho, B, tol, product_tol, mode) -> CertificateReport:
    sums, products = _sums_and_products(H, alpha, B)
    target = (1.0 - alpha) ** H.k
    dsum = [s - rho for s in sums]
    dprod = [(p - target) / target for p in products]
    consistent = check_consistent(H, B)
    strict = STRICT_FACTOR

    if mode == "normal":
        ok = (
            all(abs(d) <= tol for d in dsum)
            and all(abs(d) <= product_tol for d in dprod)
            and consistent
        )
        cls = NORMAL if ok else NONE
    elif mode == "subnormal":
        ok = all(d <= tol for d in dsum) and all(d >= -product_tol for d in dprod)
        is_strict = any(d < -strict * tol for d in dsum) or any(d > strict * product_tol for d in dprod)
        cls = (STRICT_SUB if is_strict else SUB) if ok else NONE
    elif mode == "supernormal":
        ok = (
            all(d >= -tol for d in dsum)
            and all(d <= product_tol for d in dprod)
            and consistent
        )
        is_strict = any(d > strict * tol for d in dsum) or any(d < -strict * product_tol for d in dprod)
        cls = (STRICT_SUPER if is_strict else SUPER) if ok else NONE
    else:
        raise ValueError(f"unknown mode {mode!r}")

    return CertificateReport(
        classification=cls,
        vertex_sums=sums,
        edge_products=products,
        target_rho=rho,
        target_product=target,
        max_sum_violation=max(abs(d) for d in dsum),
        max_product_violation=max(abs(d) for d in dprod),
        consistent=consistent,
    )


def check_normal(H, alpha, rho, B, tol=SUM_TOL, product_tol=PRODUCT_TOL) -> CertificateReport:
    return _report(H, alpha, rho, B, tol, product_tol, "normal")


def check_subnormal(H, alpha, rho, B, tol=SUM_TOL, product_tol=PRODUCT_TOL) -> CertificateReport:
    return _report(H, alpha, rho, B, tol, product_tol, "subnormal")


def check_supernormal(H, alpha, rho, B, tol=SUM_TOL, product_tol=PRODUCT_TOL) -> CertificateReport:
    return _report(H, alpha, rho, B, tol, product_tol, "supernormal")


CHECKERS = {
    "normal": check_normal,
    "subnormal": check_subnormal,
    "supernormal": check_supernormal,
}


# ---------------------------------------------------------------------------
# scalar equations for four families

FAMILIES = ("Star", "S1m41", "S3m4", "S4m5")
FAMILY_MIN_M = {"Star": 1, "S1m41": 5, "S3m4": 5, "S4m5": 6}


@dataclass(frozen=True)
class FamilyConstants:
    family: str
    m: int
    k: int
    alpha: float
    rho: float
    A0: float | None = None
    A1: float | None = None
    B0: float | None = None
    B1: float | None = None
    C1: float | None = None
    A2: float | None = None
    B2: float | None = None
    C2: float | None = None
    A3: float | None = None
    B3: float | None = None


def family_graph(family: str, m: int, k: int) -> Hypergraph:
    """The supertree whose spectral radius the family equation determines."""
    if family == "Star":
        return star(m, k)
    if family == "S1m41":
        return triple_star(1, m - 4, 1, k)[0]
    if family == "S3m4":
        return double_star(3, m - 4, k)
    if family == "S4m5":
        return double_star(4, m - 5, k)
    raise BadParams(f"unknown family {family!r}")


def _pendant_weight(rho: float, alpha: float, k: int) -> float:
    # (1-alpha)^k / (rho-alpha)^(k-1); called B0, A2 or A3 depending on the family
    return (1.0 - alpha) ** k / (rho - alpha) ** (k - 1)


def _equation(family: str, m: int, k: int, alpha: float) -> Callable[[float], float | None]:
    """LHS - RHS of the family's fixed-point equation, or None outside the admissible region."""

    def star_eq(rho):
        if rho <= alpha:
            return None
        return (rho - m * alpha) * (rho - alpha) ** (k - 1) - m * (1.0 - alpha) ** k

    def s1m41(rho):
        if rho <= alpha:
            return None
        b0 = _pendant_weight(rho, alpha, k)
        b1 = rho - 2 * alpha - b0
        if b1 <= 0:
            return None
        c1 = (rho - alpha) * b0 / b1
        return rho - (m - 2) * alpha - (m - 4) * b0 - 2 * c1

    def double(a: int):
        # S_{a, m-1-a}: core edge centre u2 carries m-1-a pendants
        b = m - 1 - a

        def eq(rho):
            if rho <= alpha:
                return None
            p = _pendant_weight(rho, alpha, k)
            gap = rho - (a + 1) * alpha - a * p
            if gap <= 0:
                return None
            return rho - (b + 1) * alpha - b * p - (rho - alpha) * p / gap

        return eq

    if family == "Star":
        return star_eq
    if family == "S1m41":
        return s1m41
    if family == "S3m4":
        return double(3)
    if family == "S4m5":
        return double(4)
    raise BadParams(f"unknown family {family!r}")


def _first_root(g, lo: float, hi: float, step: float = 1e-2, xtol: float = 0.0) -> float:
    """Scan [lo, hi] for the first admissible sign change of g and bisect it."""
    prev_r: float | None = None
    prev_g: float | None = None
    last_bad: float | None = None
    r = lo
    while r <= hi + step:
        val = g(r)
        if val is None:
            last_bad, prev_r, prev_g = r, None, None
            r += step
            continue
        if prev_g is None and last_bad is not None:
            # entering the admissible region: locate its edge, the root may sit
            # closer to it than one scan step
            a, b = last_bad, r
            while b - a > 1e-15 * max(1.0, b):
                mid = 0.5 * (a + b)
                if g(mid) is None:
                    a = mid
                else:
                    b = mid
            if b < r:
                prev_r, prev_g = b, g(b)
        if val == 0.0:
            return r
        if prev_g is not None and (prev_g < 0) != (val < 0):
            a, b, ga = prev_r, r, prev_g
            while b - a > xtol:
                mid = 0.5 * (a + b)
                if mid in (a, b):
                    break
                gm = g(mid)
                if gm is None:
                    raise ConstraintViolated(f"admissible region is not an interval near {mid}")
                if gm == 0.0:
                    return mid
                if (gm < 0) == (ga < 0):
                    a, ga = mid, gm
                else:
                    b = mid
            return 0.5 * (a + b)
        prev_r, prev_g = r, val
        r += step
    raise NoRoot(f"no admissible sign change in ({lo}, {hi}]")


def family_constants(family: str, m: int, k: int, alpha: float, rho: float) -> FamilyConstants:
    """Evaluate the named constants of a family at a given rho."""
    p = _pendant_weight(rho, alpha, k)
    if family == "Star":
        return FamilyConstants(family, m, k, alpha, rho)
    if family == "S1m41":
        a0 = (1.0 - alpha) / (rho - alpha)
        b1 = rho - 2 * alpha - p
        return FamilyConstants(
            family, m, k, alpha, rho,
            A0=a0, A1=a0**k, B0=p, B1=b1, C1=(rho - alpha) * p / b1,
        )
    if family == "S3m4":
        b2 = rho - 2 * alpha - p
        return FamilyConstants(family, m, k, alpha, rho, A2=p, B2=b2, C2=(rho - alpha) * p / b2)
    if family == "S4m5":
        return FamilyConstants(family, m, k, alpha, rho, A3=p, B3=rho - 2 * alpha - p)
    raise BadParams(f"unknown family {family!r}")


def _validate_constants(c: FamilyConstants) -> None:
    rho, a = c.rho, c.alpha
    checks = [("rho > alpha", rho > a)]
    for name in ("A0", "A1", "B0", "B1", "C1", "A2", "B2", "C2", "A3", "B3"):
        val = getattr(c, name)
        if val is not None:
            checks.append((f"{name} > 0", val > 0))
    if c.family == "S1m41":
        checks += [
            ("rho > 2 alpha + B0", rho > 2 * a + c.B0),
            ("rho - 2 alpha - C1 > 0", rho - 2 * a - c.C1 > 0),
        ]
    elif c.family == "S3m4":
        checks += [
            ("rho > 4 alpha + 3 A2", rho > 4 * a + 3 * c.A2),
            ("rho - 2 alpha - C2 > 0", rho - 2 * a - c.C2 > 0),
        ]
    elif c.family == "S4m5":
        checks.append(("rho > 5 alpha + 4 A3", rho > 5 * a + 4 * c.A3))
    failed = [name for name, ok in checks if not ok]
    if failed:
        raise ConstraintViolated(f"{c.family} m={c.m} k={c.k} alpha={a}: {', '.join(failed)}")


def solve_family_rho(family: str, m: int, k: int, alpha: float) -> FamilyConstants:
    """rho_alpha of a family graph from its reduced scalar equation.

    Scans upward from just above alpha in steps of 0.01, skipping points
    outside the admissible region, and bisects the first sign change.
    """
    _check_alpha(alpha)
    if family not in FAMILIES:
        raise BadParams(f"unknown family {family!r}; expected one of {FAMILIES}")
    if m < FAMILY_MIN_M[family] or k < 3:
        raise BadParams(f"{family} needs m >= {FAMILY_MIN_M[family]} and k >= 3, got m={m}, k={k}")
    rho = _first_root(_equation(family, m, k, alpha), alpha + 1e-6, m + 1.0)
    consts = family_constants(family, m, k, alpha, rho)
    _validate_constants(consts)
    return consts


# ---------------------------------------------------------------------------
# explicit lemma certificates

@dataclass(frozen=True)
class LemmaCase:
    family: str        # equation fixing the reference rho
    graph: str         # supertree receiving the labeling
    mode: str          # checker to apply
    expected: str
    designated: str    # the one vertex whose sum is not tight
    min_m: int         # smallest m at which the labeling is defined
    claim_m: int       # smallest m at which the separation is asserted


LEMMA_CASES: dict[str, LemmaCase] = {
    "L41-T11m3-super": LemmaCase("S1m41", "T11m3", "supernormal", STRICT_SUPER, "u3", 5, 7),
    "L41-Sm301-sub": LemmaCase("S1m41", "Sm301", "subnormal", STRICT_SUB, "u1", 5, 7),
    "L42-Sm301-super": LemmaCase("S3m4", "Sm301", "supernormal", STRICT_SUPER, "u1", 5, 10),
    "L42-T12m4-sub": LemmaCase("S3m4", "T12m4", "subnormal", STRICT_SUB, "u3", 5, 10),
    "L43-T12m4-super": LemmaCase("S4m5", "T12m4", "supernormal", STRICT_SUPER, "u3", 6, 13),
}


@dataclass(frozen=True)
class LemmaCertificate:
    case: str
    graph: Hypergraph
    roles: Roles
    rho_ref: float
    B: WeightedIncidence
    expected: str
    mode: str
    designated_vertex: int
    constants: FamilyConstants

    def check(self, tol: float = LEMMA_SUM_TOL, product_tol: float = PRODUCT_TOL) -> CertificateReport:
        return CHECKERS[self.mode](self.graph, self.constants.alpha, self.rho_ref, self.B, tol, product_tol)


def _core_weights(case: str, c: FamilyConstants) -> dict[tuple[str, str], float]:
    """Weights on the non-leaf incidences, keyed by (vertex role, edge role).

    Edge role ``"pend"`` stands for every pendent edge at that vertex.
    """
    rho, a, k = c.rho, c.alpha, c.k
    q = 1.0 - a
    if case == "L41-T11m3-super":
        return {
            ("u1", "e1"): c.B1,
            ("u2", "e1"): c.B1,
            ("u3", "e1"): q**3 * c.A0 ** (k - 3) / c.B1**2,
            ("u1", "pend"): c.B0,
            ("u2", "pend"): c.B0,
            ("u3", "pend"): c.B0,
        }
    if case == "L41-Sm301-sub":
        slack = rho - 2 * a - c.C1
        return {
            ("u1", "e1"): q**2 * c.A0 ** (k - 2) / slack,
            ("u1", "pend"): c.B0,
            ("u2", "e1"): slack,
            ("u2", "e2"): c.C1,
            ("u3", "e2"): c.B1,
            ("u3", "pend"): c.B0,
        }
    if case == "L42-Sm301-super":
        slack = rho - 2 * a - c.C2
        return {
            ("u1", "e1"): (rho - a) * c.A2 / slack,
            ("u1", "pend"): c.A2,
            ("u2", "e1"): slack,
            ("u2", "e2"): c.C2,
            ("u3", "e2"): c.B2,
            ("u3", "pend"): c.A2,
        }
    if case in ("L42-T12m4-sub", "L43-T12m4-super"):
        A, Bc = (c.A2, c.B2) if case == "L42-T12m4-sub" else (c.A3, c.B3)
        mid = rho - 3 * a - 2 * A
        return {
            ("u1", "e1"): Bc,
            ("u1", "pend"): A,
            ("u2", "e1"): mid,
            ("u2", "pend"): A,
            ("u3", "e1"): (rho - a) ** 2 * A / (mid * Bc),
            ("u3", "pend"): A,
        }
    raise BadParams(f"unknown lemma case {case!r}")


def build_lemma_certificate(case: str, m: int, k: int, alpha: float) -> LemmaCertificate:
    """Lay down the explicit labeling of one separation lemma.

    The reference rho is the root of the case's family equation; every
    degree-1 vertex gets weight ``rho - alpha`` and the named centers get the
    closed-form weights. Below the case's claim threshold the labeling is
    still built but no classification is promised (``expected == "none"``).
    """
    _check_alpha(alpha)
    if case not in LEMMA_CASES:
        raise BadParams(f"unknown lemma case {case!r}; expected one of {sorted(LEMMA_CASES)}")
    info = LEMMA_CASES[case]
    if m < info.min_m or k < 3:
        raise BadParams(f"{case} needs m >= {info.min_m} and k >= 3, got m={m}, k={k}")
    consts = solve_family_rho(info.family, m, k, alpha)
    rho = consts.rho

    if info.graph == "T11m3":
        H, roles = t_supertree(1, 1, m - 3, k)
    elif info.graph == "T12m4":
        H, roles = t_supertree(1, 2, m - 4, k)
    else:
        H, roles = triple_star(m - 3, 0, 1, k)

    deg, _ = degrees(H)
    core = _core_weights(case, consts)
    weights: dict[tuple[int, int], float] = {}
    for i, e in enumerate(H.edges):
        for v in e:
            if deg[v] == 1:
                weights[(v, i)] = rho - alpha
    for (vrole, erole), w in core.items():
        v = roles.vertices[vrole]
        targets = roles.pendants[vrole] if erole == "pend" else [roles.edges[erole]]
        for i in targets:
            weights[(v, i)] = w
    B = WeightedIncidence(weights)
    B.check_complete(H)

    expected = info.expected if m >= info.claim_m else NONE
    return LemmaCertificate(
        case, H, roles, rho, B, expected, info.mode, roles.vertices[info.designated], consts
    )


# ---------------------------------------------------------------------------
# text serialization: "rho <value>" then one "v e weight" line per pair

def write_certificate(rho: float, B: WeightedIncidence) -> str:
    lines = [f"rho {rho!r}"]
    for (v, i) in sorted(B.weights, key=lambda p: (p[1], p[0])):
        lines.append(f"{v} {i} {B.weights[(v, i)]!r}")
    return "\n".join(lines) + "\n"


def read_certificate(text: str) -> tuple[float, WeightedIncidence]:
    from .hypergraph import ParseError

    rho = None
    weights: dict[tuple[int, int], float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if rho is None:
                if len(parts) != 2 or parts[0] != "rho":
                    raise ParseError("first line must be 'rho <value>'", lineno)
                rho = float(parts[1])
                continue
            if len(parts) != 3:
                raise ParseError("expected 'vertex edge weight'", lineno)
            key = (int(parts[0]), int(parts[1]))
            if key in weights:
                raise ParseError(f"pair {key} listed twice", lineno)
            weights[key] = float(parts[2])
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(str(exc), lineno) from None
    if rho is None:
        raise ParseError("empty certificate", 0)
    return rho, WeightedIncidence(weights)
