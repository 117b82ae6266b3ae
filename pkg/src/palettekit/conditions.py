"""Separation conditions between families of palettes.

A hypergraph that is colorable by every palette in ``positives`` and by no
palette in ``negatives`` exists exactly when, for every positive index ``q``
and every negative ``N``, the palette

    positives[q] x prod(symmetrize(positives[s]) for s != q)

has no homomorphism to ``N`` or to ``inverse(N)``.  This module evaluates
that condition, searches for small separating hypergraphs, and runs the
checks behind the 4/81 construction.
"""

from __future__ import annotations

import itertools
import operator
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterator, Sequence

import numpy as np

from . import named
from .coloring import (
    Hypergraph,
    OrderedHypergraph,
    PairColoring,
    check_certificate,
    colorable,
    pair,
)
from .homomorphism import Homomorphism, exists_hom
from .lagrangian import brute_force_lagrangian, lagrangian
from .palette import (
    ColorRoles,
    Palette,
    classify_roles,
    density,
    find_isomorphism,
    inverse,
    product,
    product_index,
    symmetrize,
)

STRAIGHT = "straight"
INVERTED = "inverted"
FOUR_81 = Fraction(4, 81)


@dataclass(frozen=True)
class SeparationQuery:
    positives: tuple[Palette, ...]
    negatives: tuple[Palette, ...]

    def __init__(self, positives: Sequence[Palette], negatives: Sequence[Palette]):
        if not positives or not negatives:
            raise ValueError("positives and negatives must both be nonempty")
        object.__setattr__(self, "positives", tuple(positives))
        object.__setattr__(self, "negatives", tuple(negatives))


@dataclass(frozen=True)
class BlockingCertificate:
    q: int
    q_prime: int
    direction: str
    hom: Homomorphism


@dataclass(frozen=True)
class SeparationVerdict:
    separable: bool
    certificates: tuple[BlockingCertificate, ...] = ()
    # every homomorphism test ran to completion
    exhaustive: bool = True

    def is_sound(self) -> bool:
        return self.separable == (not self.certificates) and all(c.hom.is_valid() for c in self.certificates)


def mixed_product(positives: Sequence[Palette], q: int) -> Palette:
    """``positives[q]`` times the symmetrizations of all other positives, in index order."""
    if len(positives) == 1:
        return positives[0]
    factors = [positives[q]] + [symmetrize(p) for s, p in enumerate(positives) if s != q]
    return product(factors)


def _blocking(source: Palette, target: Palette, q: int, q_prime: int) -> list[BlockingCertificate]:
    out = []
    for direction, tgt in ((STRAIGHT, target), (INVERTED, inverse(target))):
        f = exists_hom(source, tgt)
        if f is not None:
            out.append(BlockingCertificate(q, q_prime, direction, f))
    return out


def single_condition(p: Palette, p0: Palette) -> SeparationVerdict:
    certs = _blocking(p, p0, 0, 0)
    return SeparationVerdict(not certs, tuple(certs))


def multi_condition(positives: Sequence[Palette], p0: Palette, _q_prime: int = 0) -> SeparationVerdict:
    if not positives:
        raise ValueError("positives must be nonempty")
    certs = []
    for q in range(len(positives)):
        certs.extend(_blocking(mixed_product(positives, q), p0, q, _q_prime))
    return SeparationVerdict(not certs, tuple(certs))


def family_condition(query: SeparationQuery) -> SeparationVerdict:
    certs = []
    for qp, neg in enumerate(query.negatives):
        certs.extend(multi_condition(query.positives, neg, qp).certificates)
    return SeparationVerdict(not certs, tuple(certs))


def transport_certificate(
    positives: Sequence[Palette],
    cert: BlockingCertificate,
    h: Hypergraph,
    witnesses: Sequence[tuple[Sequence[int], PairColoring]],
) -> tuple[OrderedHypergraph, PairColoring]:
    """Turn colorings of ``h`` by every positive into a coloring by the blocked negative.

    ``witnesses[s]`` is a (vertex order, coloring) pair showing ``h`` is
    ``positives[s]``-colorable.  Pairs are colored in the order of positive
    ``cert.q``; for every other positive the color is kept when the two orders
    agree on the pair and replaced by its clone otherwise.  The result is
    pushed through the blocking homomorphism.  For an inverted certificate the
    returned ordered hypergraph carries the reversed order.
    """
    q = cert.q
    others = [s for s in range(len(positives)) if s != q]
    sizes = [positives[q].size] + [2 * positives[s].size for s in others]
    positions = []
    for order, _ in witnesses:
        pos = [0] * h.n
        for i, v in enumerate(order):
            pos[v] = i
        positions.append(pos)
    pos_q = positions[q]
    colors = {}
    for u, v in itertools.combinations(range(h.n), 2):
        a, b = (u, v) if pos_q[u] < pos_q[v] else (v, u)
        comps = [witnesses[q][1].of(a, b)]
        for s in others:
            c = witnesses[s][1].of(a, b)
            if positions[s][a] > positions[s][b]:
                c += positives[s].size
            comps.append(c)
        src = product_index(sizes, comps) if len(positives) > 1 else comps[0]
        colors[pair(u, v)] = cert.hom.mapping[src]
    order = tuple(witnesses[q][0])
    if cert.direction == INVERTED:
        order = order[::-1]
        target = inverse(cert.hom.target)
    else:
        target = cert.hom.target
    return OrderedHypergraph(h, order), PairColoring(target, h.n, colors)


@dataclass(frozen=True)
class Above481:
    bound_holds: bool
    witness: Homomorphism | None = None
    witness_kind: str | None = None
    roles: ColorRoles | None = None


class SolverInconsistency(AssertionError):
    pass


def density_bound_481(p: Palette) -> Above481:
    """Either a homomorphism from P_LM (into ``p`` or its inverse) or from P_3T, or the 4/81 bound.

    When no homomorphism exists, the color-role structure forced by their
    absence is checked and ``density(p) <= 4/81`` is asserted exactly; a
    failure means a search bug and raises ``SolverInconsistency``.
    """
    tests = (
        ("P_LM -> P", named.P_LM, p),
        ("P_LM -> inv(P)", named.P_LM, inverse(p)),
        ("P_3T -> P", named.P_3T, p),
    )
    for kind, src, tgt in tests:
        f = exists_hom(src, tgt)
        if f is not None:
            return Above481(False, f, kind)
    roles = classify_roles(p)
    if not roles.partition_disjoint():
        raise SolverInconsistency(f"color roles overlap without a homomorphism: {roles}")
    for x, y, z in p.triples:
        if x in roles.B and z in roles.B:
            raise SolverInconsistency(f"triple {(x, y, z)} has both ends in B")
    if p.size and density(p) > FOUR_81:
        raise SolverInconsistency(f"density {density(p)} exceeds 4/81 without a homomorphism")
    return Above481(True, roles=roles)


def random_palette(rng: random.Random, max_colors: int = 5) -> Palette:
    """Random small palette; half of the draws follow a left/middle/right layout near the 4/81 extremum."""
    k = rng.randint(1, max_colors)
    names = [f"c{i}" for i in range(k)]
    triples = set()
    if rng.random() < 0.5:
        for _ in range(rng.randint(0, min(k ** 3, 16))):
            triples.add(tuple(rng.randrange(k) for _ in range(3)))
    else:
        role = [rng.choice("LMRB") for _ in range(k)]
        by = {r: [i for i in range(k) if role[i] == r] for r in "LMRB"}
        allowed = [
            t
            for a, b in (("L", "R"), ("L", "B"), ("B", "R"), ("B", "B"))
            for t in itertools.product(by[a], by["M"], by[b])
        ]
        for t in allowed:
            if rng.random() < 0.8:
                triples.add(t)
        for _ in range(rng.choice((0, 0, 1))):
            triples.add(tuple(rng.randrange(k) for _ in range(3)))
    return Palette(names, triples)


# --- small hypergraph enumeration -------------------------------------------


@lru_cache(maxsize=None)
def _perm_weights(n: int) -> tuple[list[tuple[int, int, int]], np.ndarray]:
    edges = list(itertools.combinations(range(n), 3))
    idx = {e: i for i, e in enumerate(edges)}
    perms = list(itertools.permutations(range(n)))
    table = np.empty((len(perms), len(edges)), dtype=np.int64)
    for pi, perm in enumerate(perms):
        for ei, e in enumerate(edges):
            table[pi, ei] = idx[tuple(sorted(perm[v] for v in e))]
    return edges, np.left_shift(np.int64(1), table)


def canonical_code(n: int, edge_bits: Sequence[int]) -> int:
    """Minimum edge bitmask over all vertex relabelings."""
    _, weights = _perm_weights(n)
    if not edge_bits:
        return 0
    return int(weights[:, list(edge_bits)].sum(axis=1).min())


def enumerate_hypergraphs(n: int) -> Iterator[Hypergraph]:
    """Non-isomorphic hypergraphs on ``n`` vertices without isolated vertices.

    Ordered by edge count, then by canonical code.
    """
    edges, _ = _perm_weights(n)
    m = len(edges)
    full = (1 << n) - 1
    cover = [sum(1 << v for v in e) for e in edges]
    level = {0}
    for _ in range(m):
        nxt = set()
        for code in level:
            bits = [i for i in range(m) if code >> i & 1]
            for i in range(m):
                if not code >> i & 1:
                    nxt.add(canonical_code(n, bits + [i]))
        level = nxt
        for code in sorted(level):
            bits = [i for i in range(m) if code >> i & 1]
            if reduce(operator.or_, (cover[i] for i in bits), 0) == full:
                yield Hypergraph(n, [edges[i] for i in bits])


def _separates(h: Hypergraph, query: SeparationQuery) -> bool:
    for neg in query.negatives:
        if colorable(h, neg, max_vertices=h.n) is not None:
            return False
    for pos in query.positives:
        if colorable(h, pos, max_vertices=h.n) is None:
            return False
    return True


def _reverify(h: Hypergraph, query: SeparationQuery) -> bool:
    for pos in query.positives:
        found = colorable(h, pos, max_vertices=h.n)
        if found is None or not check_certificate(h.ordered(found[0]), pos, found[1]):
            return False
    # reversing every order trades a negative for its inverse
    return all(colorable(h, inverse(neg), max_vertices=h.n) is None for neg in query.negatives)


def witness_search(query: SeparationQuery, max_vertices: int) -> Hypergraph | None:
    """Smallest separating hypergraph with at most ``max_vertices`` vertices, or None.

    None means the bound was exhausted; it does not mean that no separating
    hypergraph exists.  Hypergraphs with isolated vertices are skipped since
    dropping those vertices changes no colorability.  The search is
    exhaustive and exponential: 6 vertices take seconds to minutes, 7
    vertices is usually out of reach.
    """
    if max_vertices > 7:
        raise ValueError("witness search supports at most 7 vertices")
    for n in range(3, max_vertices + 1):
        for h in enumerate_hypergraphs(n):
            if _separates(h, query):
                if not _reverify(h, query):
                    raise SolverInconsistency(f"witness {sorted(h.edges)} failed re-verification")
                return h
    return None


# --- the 4/81 checks ----------------------------------------------------------


@dataclass
class CheckItem:
    key: str
    title: str
    passed: bool
    details: list[str] = field(default_factory=list)


@dataclass
class Report:
    items: list[CheckItem]

    @property
    def ok(self) -> bool:
        return all(i.passed for i in self.items)

    def failing(self) -> list[str]:
        return [i.key for i in self.items if not i.passed]

    def format(self) -> str:
        lines = []
        for item in self.items:
            lines.append(f"[{'PASS' if item.passed else 'FAIL'}] ({item.key}) {item.title}")
            lines.extend(f"    {d}" for d in item.details)
        lines.append("ALL CHECKS PASSED" if self.ok else f"FAILED: {', '.join(self.failing())}")
        return "\n".join(lines)


def verify_481(
    target: Palette = named.P_4_81,
    positives: Sequence[Palette] = (named.P_LM, named.P_3T),
    spot_checks: int = 2000,
    seed: int = 0,
    restarts: int = 200,
) -> Report:
    """Check every mechanically checkable premise of the 4/81 construction."""
    items = []
    positives = list(positives)

    details = []
    ok = True
    for q in range(len(positives)):
        src = mixed_product(positives, q)
        for direction, tgt in ((STRAIGHT, target), (INVERTED, inverse(target))):
            f = exists_hom(src, tgt)
            label = f"{src.name or f'factor {q}'} -> {'inv(' if direction == INVERTED else ''}{target.name or 'target'}{')' if direction == INVERTED else ''}"
            details.append(f"{label}: {'none' if f is None else 'HOMOMORPHISM FOUND'}")
            ok &= f is None
    items.append(CheckItem("i", "no homomorphism from the mixed products to the target or its inverse", ok, details))

    res = lagrangian(target, restarts=restarts, tol=1e-10, seed=seed)
    grid = brute_force_lagrangian(target, 9) if target.size <= 5 else None
    ok = abs(res.value - 4 / 81) <= 1e-6 and grid == FOUR_81
    items.append(
        CheckItem(
            "ii",
            "Lagrangian of the target equals 4/81",
            ok,
            [
                f"numerical maximum {res.value:.12g} (4/81 = {4 / 81:.12g}), KKT residual {res.kkt_residual:.3g}",
                f"argmax {np.array2string(res.argmax, precision=6)}",
                f"grid maximum at step 1/9: {grid}",
            ],
        )
    )

    iso = find_isomorphism(target, inverse(target))
    items.append(
        CheckItem(
            "iii",
            "target and its inverse agree up to renaming colors",
            iso is not None,
            [f"renaming {iso.named()}" if iso else "no isomorphism"],
        )
    )

    rng = random.Random(seed)
    hits = 0
    violations = []
    for i in range(spot_checks):
        p = random_palette(rng)
        try:
            r = density_bound_481(p)
        except SolverInconsistency as exc:
            violations.append(f"palette #{i}: {exc}")
            continue
        hits += r.bound_holds
    items.append(
        CheckItem(
            "iv",
            "palettes without P_LM / P_3T homomorphisms have density at most 4/81",
            not violations,
            [f"{spot_checks} random palettes, {hits} with no homomorphism, {len(violations)} violations"] + violations[:5],
        )
    )

    verdict = family_condition(SeparationQuery(positives, [target]))
    details = [f"{len(verdict.certificates)} blocking certificates"]
    for c in verdict.certificates:
        details.append(f"q={c.q} q'={c.q_prime} {c.direction}: {c.hom.named()}")
    items.append(CheckItem("v", "positives and target are separable", verdict.separable, details))
    return Report(items)
