"""Palette colorability of small 3-uniform hypergraphs.

An ordered hypergraph is colorable by a palette when its vertex pairs can be
colored so that every edge ``u < v < w`` (in the vertex order) reads a
feasible triple ``(color(uv), color(uw), color(vw))``.  An unordered
hypergraph is colorable when some vertex order makes it so.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .palette import Palette

DEFAULT_MAX_ORDERED = 8
DEFAULT_MAX_UNORDERED = 7

Pair = tuple[int, int]
Edge = tuple[int, int, int]


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: frozenset[Edge]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("negative vertex count")
        normalized = set()
        for e in edges:
            e = tuple(sorted(e))
            if len(e) != 3 or len(set(e)) != 3:
                raise ValueError(f"edge {e} does not have 3 distinct vertices")
            if not all(0 <= v < n for v in e):
                raise ValueError(f"edge {e} has a vertex outside [0, {n})")
            normalized.add(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def remove_edge(self, e: Sequence[int]) -> "Hypergraph":
        return Hypergraph(self.n, self.edges - {tuple(sorted(e))})

    def ordered(self, order: Sequence[int] | None = None) -> "OrderedHypergraph":
        return OrderedHypergraph(self, tuple(range(self.n)) if order is None else tuple(order))

    def automorphisms(self) -> list[tuple[int, ...]]:
        out = []
        for perm in itertools.permutations(range(self.n)):
            if all(tuple(sorted(perm[v] for v in e)) in self.edges for e in self.edges):
                out.append(perm)
        return out


@dataclass(frozen=True)
class OrderedHypergraph:
    base: Hypergraph
    order: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(self.base.n)):
            raise ValueError("order is not a permutation of the vertices")

    @property
    def n(self) -> int:
        return self.base.n

    def position(self) -> list[int]:
        pos = [0] * self.n
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos

    def reversed(self) -> "OrderedHypergraph":
        return OrderedHypergraph(self.base, self.order[::-1])

    def oriented_edges(self) -> list[Edge]:
        """Edges as vertex triples listed in increasing order position."""
        pos = self.position()
        return [tuple(sorted(e, key=pos.__getitem__)) for e in self.base.sorted_edges()]


def pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class PairColoring:
    palette: Palette
    n: int
    colors: dict[Pair, int]

    def of(self, u: int, v: int) -> int:
        return self.colors[pair(u, v)]

    def mapped(self, mapping: Sequence[int], target: Palette) -> "PairColoring":
        """Push the coloring through a color map (e.g. a palette homomorphism)."""
        return PairColoring(target, self.n, {k: mapping[c] for k, c in self.colors.items()})

    def named(self) -> dict[Pair, str]:
        return {k: self.palette.colors[c] for k, c in sorted(self.colors.items())}


def check_certificate(h: OrderedHypergraph, p: Palette, c: PairColoring) -> bool:
    if c.n != h.n:
        raise ValueError(f"coloring is for {c.n} vertices, hypergraph has {h.n}")
    expected = {pair(u, v) for u, v in itertools.combinations(range(h.n), 2)}
    if set(c.colors) != expected:
        raise ValueError("coloring does not cover exactly the vertex pairs")
    if any(not 0 <= col < p.size for col in c.colors.values()):
        raise ValueError("coloring uses a color outside the palette")
    for u, v, w in h.oriented_edges():
        if (c.of(u, v), c.of(u, w), c.of(v, w)) not in p.triples:
            return False
    return True


def _check_size(n: int, limit: int, default: int) -> None:
    if limit > default:
        warnings.warn(f"size bound {limit} exceeds default {default}; search is exponential", stacklevel=3)
    if n > limit:
        raise InstanceTooLarge(f"instance too large: {n} vertices > bound {limit}")


class _PartialIndex:
    """Feasible (left, middle, right) patterns with some positions unknown."""

    def __init__(self, p: Palette):
        self.full = p.triples
        self.lm = {(x, y) for x, y, _ in p.triples}
        self.lr = {(x, z) for x, _, z in p.triples}
        self.mr = {(y, z) for _, y, z in p.triples}
        self.roles = [sorted({t[i] for t in p.triples}) for i in range(3)]

    def ok(self, a: int | None, b: int | None, c: int | None) -> bool:
        if a is not None and b is not None:
            if c is not None:
                return (a, b, c) in self.full
            return (a, b) in self.lm
        if a is not None and c is not None:
            return (a, c) in self.lr
        if b is not None and c is not None:
            return (b, c) in self.mr
        return True


def _search_ordered(h: OrderedHypergraph, p: Palette) -> PairColoring | None:
    n = h.n
    pos = h.position()
    all_pairs = [pair(u, v) for u, v in itertools.combinations(range(n), 2)]
    if all_pairs and p.size == 0:
        return None
    oriented = h.oriented_edges()
    if oriented and not p.triples:
        return None
    index = _PartialIndex(p)

    # pairs carry (role, edge) memberships; role 0 = left, 1 = middle, 2 = right
    edge_pairs = [(pair(u, v), pair(u, w), pair(v, w)) for u, v, w in oriented]
    member: dict[Pair, list[int]] = {}
    domain: dict[Pair, set[int]] = {}
    for ei, prs in enumerate(edge_pairs):
        for role, pr in enumerate(prs):
            member.setdefault(pr, []).append(ei)
            allowed = set(index.roles[role])
            domain[pr] = domain[pr] & allowed if pr in domain else allowed
    if any(not d for d in domain.values()):
        return None

    def key(pr: Pair) -> tuple[int, int]:
        a, b = sorted((pos[pr[0]], pos[pr[1]]))
        return (a, b)

    search_pairs = sorted(member, key=key)
    assign: dict[Pair, int] = {}

    def consistent(pr: Pair) -> bool:
        for ei in member[pr]:
            if not index.ok(*(assign.get(x) for x in edge_pairs[ei])):
                return False
        return True

    def rec(i: int) -> bool:
        if i == len(search_pairs):
            return True
        pr = search_pairs[i]
        for col in sorted(domain[pr]):
            assign[pr] = col
            if consistent(pr) and rec(i + 1):
                return True
        del assign[pr]
        return False

    if not rec(0):
        return None
    colors = {pr: assign.get(pr, 0) for pr in all_pairs}
    return PairColoring(p, n, colors)


def ordered_colorable(
    h: OrderedHypergraph, p: Palette, max_vertices: int = DEFAULT_MAX_ORDERED
) -> PairColoring | None:
    """A certificate coloring for the ordered hypergraph, or None if none exists."""
    _check_size(h.n, max_vertices, DEFAULT_MAX_ORDERED)
    return _search_ordered(h, p)


def colorable(
    h: Hypergraph,
    p: Palette,
    max_vertices: int = DEFAULT_MAX_UNORDERED,
    skip_isomorphic: bool = False,
) -> tuple[tuple[int, ...], PairColoring] | None:
    """Try vertex orders in lexicographic order; return the first colorable one.

    With ``skip_isomorphic`` only orders that are lexicographically least in
    their orbit under the automorphisms of ``h`` are tried.
    """
    _check_size(h.n, max_vertices, DEFAULT_MAX_UNORDERED)
    auts = h.automorphisms() if skip_isomorphic else []
    for order in itertools.permutations(range(h.n)):
        if auts and any(tuple(s[v] for v in order) < order for s in auts):
            continue
        cert = _search_ordered(OrderedHypergraph(h, order), p)
        if cert is not None:
            return order, cert
    return None


def random_palette_hypergraph(
    p: Palette, n: int, distribution: Sequence[float] | None = None, seed: int = 0
) -> tuple[OrderedHypergraph, PairColoring]:
    """Random ``p``-colored hypergraph on vertices ``0..n-1`` in natural order.

    Each pair gets an independent color drawn from ``distribution`` (uniform
    by default); a vertex triple is an edge exactly when its pair colors form
    a feasible triple.
    """
    if p.size == 0:
        raise ValueError("empty palette")
    if distribution is None:
        dist = np.full(p.size, 1.0 / p.size)
    else:
        dist = np.asarray(distribution, dtype=float)
        if dist.shape != (p.size,) or dist.min() < 0 or abs(dist.sum() - 1) > 1e-12:
            raise ValueError("distribution is not a probability vector over the palette colors")
    rng = np.random.default_rng(seed)
    pairs = list(itertools.combinations(range(n), 2))
    drawn = rng.choice(p.size, size=len(pairs), p=dist)
    colmat = np.zeros((n, n), dtype=np.intp)
    for (u, v), c in zip(pairs, drawn):
        colmat[u, v] = c
    feasible = np.zeros((p.size,) * 3, dtype=bool)
    for t in p.triples:
        feasible[t] = True
    if n >= 3:
        trip = np.array(list(itertools.combinations(range(n), 3)), dtype=np.intp)
        i, j, k = trip.T
        hit = feasible[colmat[i, j], colmat[i, k], colmat[j, k]]
        edges = [tuple(e) for e in trip[hit].tolist()]
    else:
        edges = []
    coloring = PairColoring(p, n, {pr: int(c) for pr, c in zip(pairs, drawn)})
    return Hypergraph(n, edges).ordered(), coloring


def min_induced_density(
    h: Hypergraph,
    min_frac: float,
    exact: bool | None = None,
    sample_count: int = 1000,
    seed: int = 0,
) -> float:
    """Smallest edge density ``e(S) / C(|S|, 3)`` over vertex subsets with ``|S| >= min_frac * n``.

    Exact enumeration is used up to 20 vertices (or when ``exact`` is set);
    otherwise ``sample_count`` random subsets of each admissible size are
    examined, which bounds the true minimum from above.  Subsets with fewer
    than three vertices are ignored; when no subset qualifies the result is 1.
    """
    if not 0 < min_frac <= 1:
        raise ValueError("min_frac must lie in (0, 1]")
    n = h.n
    smallest = max(3, math.ceil(min_frac * n - 1e-9))
    if smallest > n:
        return 1.0
    if exact is None:
        exact = n <= 20
    edge_masks = [sum(1 << v for v in e) for e in h.sorted_edges()]
    best = 1.0
    if exact:
        masks = np.arange(1 << n, dtype=np.int64)
        sizes = np.zeros(len(masks), dtype=np.int64)
        for v in range(n):
            sizes += (masks >> v) & 1
        keep = sizes >= smallest
        masks, sizes = masks[keep], sizes[keep]
        counts = np.zeros(len(masks), dtype=np.int64)
        for em in edge_masks:
            counts += (masks & em) == em
        ratios = counts / (sizes * (sizes - 1) * (sizes - 2) / 6)
        return float(min(best, ratios.min()))
    rng = np.random.default_rng(seed)
    edges = np.array(h.sorted_edges(), dtype=np.intp).reshape(-1, 3)
    for size in range(smallest, n + 1):
        for _ in range(sample_count):
            chosen = np.zeros(n, dtype=bool)
            chosen[rng.choice(n, size=size, replace=False)] = True
            e = int(chosen[edges].all(axis=1).sum()) if len(edges) else 0
            best = min(best, e / math.comb(size, 3))
    return best
