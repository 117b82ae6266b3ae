"""Maximization of the palette cubic over the probability simplex.

The objective is ``sum over feasible triples (x, y, z) of w[x] w[y] w[z]``.
Its maximum is found by multi-start projected gradient ascent with a
backtracking line search, followed by a Newton polish on the support of the
best point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .palette import Palette


@dataclass(frozen=True)
class LagrangianResult:
    value: float
    argmax: np.ndarray
    gradient: np.ndarray
    kkt_residual: float
    restarts_used: int


def _triple_array(p: Palette) -> np.ndarray:
    if not p.triples:
        return np.zeros((0, 3), dtype=np.intp)
    return np.array(p.sorted_triples(), dtype=np.intp)


def _check_point(p: Palette, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (p.size,):
        raise ValueError(f"point has shape {x.shape}, palette has {p.size} colors")
    return x


def objective(p: Palette, x) -> float:
    x = _check_point(p, x)
    t = _triple_array(p)
    return float(np.sum(x[t[:, 0]] * x[t[:, 1]] * x[t[:, 2]]))


def exact_objective(p: Palette, x) -> Fraction:
    """Objective in rational arithmetic; ``x`` holds Fractions (or ints)."""
    if len(x) != p.size:
        raise ValueError(f"point has length {len(x)}, palette has {p.size} colors")
    return sum((Fraction(x[a]) * x[b] * x[c] for a, b, c in p.triples), Fraction(0))


def _grad(t: np.ndarray, x: np.ndarray) -> np.ndarray:
    g = np.zeros_like(x)
    a, b, c = x[t[:, 0]], x[t[:, 1]], x[t[:, 2]]
    np.add.at(g, t[:, 0], b * c)
    np.add.at(g, t[:, 1], a * c)
    np.add.at(g, t[:, 2], a * b)
    return g


def gradient(p: Palette, x) -> np.ndarray:
    x = _check_point(p, x)
    return _grad(_triple_array(p), x)


def _hessian(t: np.ndarray, x: np.ndarray) -> np.ndarray:
    n = len(x)
    h = np.zeros((n, n))
    for a, b, c in t:
        for i, j, k in ((a, b, c), (b, c, a), (c, a, b)):
            # d^2/dx_i dx_j of x_i x_j x_k, symmetric contributions
            h[i, j] += x[k]
            h[j, i] += x[k]
    return h


def project_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean projection onto the probability simplex (sort and threshold)."""
    n = len(v)
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    ind = np.arange(1, n + 1)
    rho = np.nonzero(u - css / ind > 0)[0][-1]
    theta = css[rho] / (rho + 1)
    return np.maximum(v - theta, 0.0)


def kkt_residual(g: np.ndarray, x: np.ndarray, tol: float) -> float:
    """Violation of first-order optimality at ``x`` for gradient ``g``.

    On the support (weights above ``tol``) all gradient components should
    agree; off the support none should exceed the common value.
    """
    support = x > tol
    if not support.any():
        support = x >= x.max()
    lam = g[support].max()
    res = float(lam - g[support].min())
    if (~support).any():
        res = max(res, float(np.max(g[~support] - lam)))
    return max(res, 0.0)


def _f(t: np.ndarray, x: np.ndarray) -> float:
    return float(np.sum(x[t[:, 0]] * x[t[:, 1]] * x[t[:, 2]]))


def _ascend(t: np.ndarray, x: np.ndarray, tol: float, max_iter: int) -> np.ndarray:
    fx = _f(t, x)
    for _ in range(max_iter):
        g = _grad(t, x)
        if kkt_residual(g, x, tol) <= tol:
            break
        step = 1.0
        while True:
            y = project_simplex(x + step * g)
            fy = _f(t, y)
            d = y - x
            if fy >= fx + float(g @ d) - float(d @ d) / (2 * step) or step < 1e-20:
                break
            step *= 0.5
        if np.max(np.abs(y - x)) <= 1e-16:
            break
        x, fx = y, fy
    return x


def _polish(t: np.ndarray, x: np.ndarray, tol: float, rounds: int = 20) -> np.ndarray:
    """Newton iterations on the stationarity system restricted to the support."""
    best, fbest = x, _f(t, x)
    for _ in range(rounds):
        g = _grad(t, best)
        if kkt_residual(g, best, tol) <= tol:
            break
        s = np.nonzero(best > tol)[0]
        k = len(s)
        h = _hessian(t, best)[np.ix_(s, s)]
        # solve H dx - lam = -g, sum(dx) = 0 on the support
        kkt = np.zeros((k + 1, k + 1))
        kkt[:k, :k] = h
        kkt[:k, k] = -1.0
        kkt[k, :k] = 1.0
        rhs = np.concatenate([-g[s], [0.0]])
        try:
            sol = np.linalg.lstsq(kkt, rhs, rcond=None)[0]
        except np.linalg.LinAlgError:
            break
        y = np.zeros_like(best)
        y[s] = best[s] + sol[:k]
        if y.min() < 0:
            break
        y = y / y.sum()
        fy = _f(t, y)
        if fy + 1e-15 < fbest:
            break
        best, fbest = y, fy
    best = best.copy()
    best[best <= tol * 1e-3] = 0.0
    return best / best.sum()


def lagrangian(
    p: Palette,
    restarts: int = 200,
    tol: float = 1e-10,
    seed: int = 0,
    max_iter: int = 10_000,
) -> LagrangianResult:
    """Best value of the palette cubic over ``restarts`` random starts plus the uniform start.

    Deterministic for a fixed ``seed``.  Ties between starts keep the earlier
    start, and the uniform start comes first.
    """
    n = p.size
    if n == 0:
        raise ValueError("empty palette")
    t = _triple_array(p)
    uniform = np.full(n, 1.0 / n)
    if len(t) == 0:
        return LagrangianResult(0.0, uniform, np.zeros(n), 0.0, 0)
    rng = np.random.default_rng(seed)
    starts = [uniform]
    for _ in range(restarts):
        e = rng.exponential(size=n)
        starts.append(e / e.sum())

    best_x, best_f = None, -np.inf
    for x0 in starts:
        x = _polish(t, _ascend(t, x0, max(tol, 1e-7), max_iter), tol)
        if kkt_residual(_grad(t, x), x, tol) > tol:
            x = _polish(t, _ascend(t, x, tol, max_iter), tol)
        fx = _f(t, x)
        if fx > best_f:
            best_x, best_f = x, fx
    g = _grad(t, best_x)
    return LagrangianResult(
        value=best_f,
        argmax=best_x,
        gradient=g,
        kkt_residual=kkt_residual(g, best_x, tol),
        restarts_used=restarts,
    )


def grid_points(n: int, steps: int):
    """All compositions of ``steps`` into ``n`` nonnegative parts."""
    for cuts in itertools.combinations(range(steps + n - 1), n - 1):
        prev = -1
        parts = []
        for c in cuts:
            parts.append(c - prev - 1)
            prev = c
        parts.append(steps + n - 2 - prev)
        yield parts


def brute_force_lagrangian(p: Palette, grid_steps: int) -> Fraction:
    """Exact maximum of the objective over simplex points with denominator ``grid_steps``.

    A certified lower bound on the Lagrangian.
    """
    if p.size > 5:
        raise ValueError(f"grid search limited to 5 colors, palette has {p.size}")
    if p.size == 0:
        raise ValueError("empty palette")
    if grid_steps < 1:
        raise ValueError("grid_steps must be positive")
    triples = p.sorted_triples()
    best = 0
    for parts in grid_points(p.size, grid_steps):
        v = sum(parts[a] * parts[b] * parts[c] for a, b, c in triples)
        best = max(best, v)
    return Fraction(best, grid_steps ** 3)
