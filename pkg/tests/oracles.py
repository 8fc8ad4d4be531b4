"""Reference computations that share no code with the library's numerics."""

from itertools import permutations
from math import factorial

import mpmath as mp
import numpy as np


def adjacency_tensor(H):
    """Dense order-k adjacency tensor with entries 1/(k-1)! on every edge permutation."""
    A = np.zeros((H.n,) * H.k)
    for e in H.edges:
        for p in permutations(e):
            A[p] = 1.0 / factorial(H.k - 1)
    return A


def tensor_apply(H, alpha, x):
    """(alpha D + (1 - alpha) A) x^(k-1) by repeated contraction of the dense tensor."""
    x = np.asarray(x, dtype=float)
    T = adjacency_tensor(H)
    for _ in range(H.k - 1):
        T = T @ x
    deg = np.zeros(H.n)
    for e in H.edges:
        deg[list(e)] += 1
    return alpha * deg * x ** (H.k - 1) + (1 - alpha) * T


def star_rho(m, k, alpha):
    """Largest real root of (rho - m alpha)(rho - alpha)^(k-1) - m (1 - alpha)^k."""
    poly = np.polynomial.Polynomial([-m * alpha, 1.0]) * np.polynomial.Polynomial([-alpha, 1.0]) ** (k - 1)
    poly = poly - m * (1 - alpha) ** k
    roots = poly.roots()
    real = roots[np.abs(roots.imag) < 1e-9].real
    guess = float(real.max())
    # polish with mpmath at high precision
    f = lambda r: (r - m * mp.mpf(alpha)) * (r - mp.mpf(alpha)) ** (k - 1) - m * (1 - mp.mpf(alpha)) ** k
    with mp.workdps(40):
        return float(mp.findroot(f, guess))


def mp_rho(H, alpha, dps=50, tol="1e-35", maxit=20000):
    """Shifted power iteration carried out in mpmath at ``dps`` digits."""
    with mp.workdps(dps):
        alpha = mp.mpf(alpha)
        k = H.k
        deg = [0] * H.n
        for e in H.edges:
            for v in e:
                deg[v] += 1
        x = [mp.mpf(1)] * H.n
        tol = mp.mpf(tol)
        for _ in range(maxit):
            y = [(alpha * deg[v] + 1) * x[v] ** (k - 1) for v in range(H.n)]
            for e in H.edges:
                for v in e:
                    p = mp.mpf(1)
                    for u in e:
                        if u != v:
                            p *= x[u]
                    y[v] += (1 - alpha) * p
            r = [y[v] / x[v] ** (k - 1) for v in range(H.n)]
            lo, hi = min(r) - 1, max(r) - 1
            if hi - lo < tol:
                return (lo + hi) / 2
            x = [yy ** (mp.mpf(1) / (k - 1)) for yy in y]
            s = mp.fsum(xx**k for xx in x) ** (mp.mpf(1) / k)
            x = [xx / s for xx in x]
        raise RuntimeError("mpmath power iteration did not converge")
