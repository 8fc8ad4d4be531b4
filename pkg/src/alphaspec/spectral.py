"""The A_alpha operator of a k-uniform hypergraph and its spectral radius.

``rho_alpha`` is computed with a shifted higher-order power iteration whose
every step yields a two-sided enclosure
``min_v y_v / x_v^(k-1) <= rho + shift <= max_v y_v / x_v^(k-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .hypergraph import Hypergraph, degrees, is_connected


class SpectralError(ValueError):
    pass


class DimensionMismatch(SpectralError):
    pass


class AlphaRange(SpectralError):
    pass


class ZeroVector(SpectralError):
    pass


class NotConnected(SpectralError):
    pass


class NoConvergence(RuntimeError):
    def __init__(self, message: str, lower: float, upper: float):
        super().__init__(f"{message} (last enclosure [{lower!r}, {upper!r}])")
        self.lower = lower
        self.upper = upper


@dataclass(frozen=True)
class PowerOptions:
    tolerance: float = 1e-10
    max_iterations: int = 100_000
    shift: float = 1.0

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.shift < 0:
            raise ValueError("shift must be non-negative")


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    eigenvector: np.ndarray
    residual: float
    iterations: int
    lower_bound: float
    upper_bound: float
    # per-iteration (lower, upper) enclosure of rho, shift already removed
    history: list[tuple[float, float]] = field(default_factory=list, repr=False)


def _check_alpha(alpha: float) -> None:
    if not 0.0 <= alpha < 1.0:
        raise AlphaRange(f"alpha must lie in [0, 1), got {alpha}")


def _as_vector(H: Hypergraph, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (H.n,):
        raise DimensionMismatch(f"expected a vector of length {H.n}, got shape {x.shape}")
    return x


class _Operator:
    """Precomputed arrays for repeated application of A_alpha."""

    def __init__(self, H: Hypergraph, alpha: float):
        _check_alpha(alpha)
        self.n, self.k, self.alpha = H.n, H.k, alpha
        self.E = np.array(H.edges, dtype=np.intp)
        self.flat = self.E.ravel()
        self.deg = np.array(degrees(H)[0], dtype=float)

    def apply(self, x: np.ndarray) -> np.ndarray:
        X = x[self.E]
        # product of the other k-1 members, via prefix/suffix products
        left = np.ones_like(X)
        right = np.ones_like(X)
        left[:, 1:] = np.cumprod(X[:, :-1], axis=1)
        right[:, :-1] = np.cumprod(X[:, :0:-1], axis=1)[:, ::-1]
        others = left * right
        adj = np.bincount(self.flat, weights=others.ravel(), minlength=self.n)
        return self.alpha * self.deg * x ** (self.k - 1) + (1.0 - self.alpha) * adj


def apply_alpha(H: Hypergraph, alpha: float, x) -> np.ndarray:
    """(A_alpha x)_v = alpha d_v x_v^(k-1) + (1-alpha) sum_{e ∋ v} prod_{u in e, u != v} x_u."""
    return _Operator(H, alpha).apply(_as_vector(H, x))


def rayleigh(H: Hypergraph, alpha: float, x) -> float:
    """x^T(A_alpha x) / sum_v x_v^k for a nonnegative, nonzero x."""
    _check_alpha(alpha)
    x = _as_vector(H, x)
    if np.any(x < 0):
        raise ValueError("rayleigh quotient needs a nonnegative vector")
    k = H.k
    norm = float(np.sum(x**k))
    if norm == 0.0:
        raise ZeroVector("rayleigh quotient of the zero vector")
    deg = np.array(degrees(H)[0], dtype=float)
    edge_terms = np.prod(x[np.array(H.edges, dtype=np.intp)], axis=1)
    num = alpha * float(np.sum(deg * x**k)) + (1.0 - alpha) * k * float(np.sum(edge_terms))
    return num / norm


def residual(H: Hypergraph, alpha: float, rho: float, x) -> float:
    x = _as_vector(H, x)
    if not np.any(x):
        raise ZeroVector("residual of the zero vector")
    return float(np.max(np.abs(rho * x ** (H.k - 1) - apply_alpha(H, alpha, x))))


def alpha_spectral_radius(
    H: Hypergraph, alpha: float, opts: PowerOptions | None = None
) -> SpectralResult:
    """Compute rho_alpha(H) and the alpha-Perron vector of a connected hypergraph.

    Starts from the all-ones vector and iterates
    ``x <- (A_alpha x + shift * x^[k-1])^[1/(k-1)]`` normalized to
    ``sum x_v^k = 1``, until the enclosure width drops to ``opts.tolerance``.
    The returned vector is the one the final enclosure was measured on, and
    ``rho`` is the midpoint of that enclosure.
    """
    opts = opts or PowerOptions()
    _check_alpha(alpha)
    if not is_connected(H):
        raise NotConnected("the Perron vector is only unique for connected hypergraphs")
    op = _Operator(H, alpha)
    k, shift = H.k, opts.shift
    x = np.ones(H.n)
    x /= np.sum(x**k) ** (1.0 / k)
    history: list[tuple[float, float]] = []
    for it in range(1, opts.max_iterations + 1):
        xk1 = x ** (k - 1)
        y = op.apply(x) + shift * xk1
        ratio = y / xk1
        lo, hi = float(ratio.min()) - shift, float(ratio.max()) - shift
        history.append((lo, hi))
        if hi - lo <= opts.tolerance:
            rho = 0.5 * (lo + hi)
            res = float(np.max(np.abs(rho * xk1 - (y - shift * xk1))))
            return SpectralResult(rho, x, res, it, lo, hi, history)
        x = y ** (1.0 / (k - 1))
        x /= np.sum(x**k) ** (1.0 / k)
    raise NoConvergence(f"no convergence after {opts.max_iterations} iterations", lo, hi)


def rho_alpha(H: Hypergraph, alpha: float, opts: PowerOptions | None = None) -> float:
    return alpha_spectral_radius(H, alpha, opts).rho
