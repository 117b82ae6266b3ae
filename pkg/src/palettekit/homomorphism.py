"""Palette homomorphism search.

Backtracking over the source colors that occur in some triple, most
constrained first, with forward checking on the ternary triple constraints.
Colors that occur in no triple are unconstrained and are filled in after the
search succeeds.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator

from .palette import Palette, Triple


@dataclass(frozen=True)
class Homomorphism:
    source: Palette
    target: Palette
    mapping: tuple[int, ...]

    def __call__(self, color: int) -> int:
        return self.mapping[color]

    def is_valid(self) -> bool:
        if len(self.mapping) != self.source.size:
            return False
        if any(not 0 <= c < self.target.size for c in self.mapping):
            return False
        f = self.mapping
        return all((f[x], f[y], f[z]) in self.target.triples for x, y, z in self.source.triples)

    def named(self) -> dict[str, str]:
        return {self.source.colors[i]: self.target.colors[c] for i, c in enumerate(self.mapping)}


def identity(p: Palette) -> Homomorphism:
    return Homomorphism(p, p, tuple(range(p.size)))


class _TargetIndex:
    """Target triples grouped by the values at a fixed subset of positions."""

    def __init__(self, triples: frozenset[Triple]):
        self.by_mask: dict[tuple[int, ...], dict[tuple[int, ...], list[Triple]]] = {}
        ordered = sorted(triples)
        for r in range(4):
            for positions in itertools.combinations(range(3), r):
                groups: dict[tuple[int, ...], list[Triple]] = defaultdict(list)
                for t in ordered:
                    groups[tuple(t[i] for i in positions)].append(t)
                self.by_mask[positions] = dict(groups)

    def matching(self, positions: tuple[int, ...], values: tuple[int, ...]) -> list[Triple]:
        return self.by_mask[positions].get(values, [])


def _search(p: Palette, q: Palette, injective: bool = False) -> Iterator[tuple[int, ...]]:
    """Yield total maps ``p -> q`` preserving triples, in deterministic order.

    Colors occurring in no triple map to target color 0 (or, when
    ``injective``, to the smallest unused target colors).
    """
    constraints = p.sorted_triples()
    occurrences: dict[int, int] = defaultdict(int)
    cons_of: dict[int, list[int]] = defaultdict(list)
    for ti, t in enumerate(constraints):
        for v in set(t):
            occurrences[v] += 1
            cons_of[v].append(ti)
    order = sorted(occurrences, key=lambda v: (-occurrences[v], v))
    free = [c for c in range(p.size) if c not in occurrences]

    if injective and p.size > q.size:
        return
    if free and q.size == 0:
        return

    index = _TargetIndex(q.triples)
    domains: dict[int, set[int]] = {v: set(range(q.size)) for v in order}
    assign: dict[int, int] = {}

    def consistent(t: Triple, cand: Triple) -> bool:
        # repeated source colors must receive one target color
        return all(cand[i] == cand[j] for i, j in ((0, 1), (0, 2), (1, 2)) if t[i] == t[j])

    def matches(t: Triple) -> list[Triple]:
        positions = tuple(i for i in range(3) if t[i] in assign)
        values = tuple(assign[t[i]] for i in positions)
        return [c for c in index.matching(positions, values) if consistent(t, c)]

    def prune(t: Triple, trail: list[tuple[int, set[int]]]) -> bool:
        cands = matches(t)
        if not cands:
            return False
        for pos in range(3):
            v = t[pos]
            if v in assign:
                continue
            allowed = {c[pos] for c in cands}
            dom = domains[v]
            if not dom <= allowed:
                trail.append((v, dom))
                domains[v] = dom & allowed
                if not domains[v]:
                    return False
        return True

    root_trail: list[tuple[int, set[int]]] = []
    for t in constraints:
        if not prune(t, root_trail):
            return

    def finish() -> tuple[int, ...]:
        mapping = [0] * p.size
        for v, c in assign.items():
            mapping[v] = c
        if injective:
            unused = iter(sorted(set(range(q.size)) - set(assign.values())))
            for v in free:
                mapping[v] = next(unused)
        return tuple(mapping)

    def rec(depth: int) -> Iterator[tuple[int, ...]]:
        if depth == len(order):
            yield finish()
            return
        v = order[depth]
        used = set(assign.values()) if injective else ()
        for val in sorted(domains[v]):
            if val in used:
                continue
            assign[v] = val
            trail: list[tuple[int, set[int]]] = []
            if all(prune(constraints[ti], trail) for ti in cons_of[v]):
                yield from rec(depth + 1)
            for var, dom in reversed(trail):
                domains[var] = dom
            del assign[v]

    yield from rec(0)


def exists_hom(p: Palette, q: Palette) -> Homomorphism | None:
    for mapping in _search(p, q):
        return Homomorphism(p, q, mapping)
    return None


def iter_homs(p: Palette, q: Palette) -> Iterator[Homomorphism]:
    """Every homomorphism ``p -> q``, enumerating unconstrained colors too."""
    free = [c for c in range(p.size) if not any(c in t for t in p.triples)]
    for mapping in _search(p, q):
        for values in itertools.product(range(q.size), repeat=len(free)):
            m = list(mapping)
            for v, c in zip(free, values):
                m[v] = c
            yield Homomorphism(p, q, tuple(m))


def count_homs(p: Palette, q: Palette, limit: int) -> int:
    """Number of homomorphisms ``p -> q``, saturating at ``limit``."""
    if limit < 1:
        raise ValueError("limit must be positive")
    used = {c for t in p.triples for c in t}
    factor = q.size ** (p.size - len(used))
    if factor == 0:
        return 0
    count = 0
    for _ in _search(p, q):
        count += factor
        if count >= limit:
            return limit
    return count


def compose(f: Homomorphism, g: Homomorphism) -> Homomorphism:
    """The composite ``g . f`` (apply ``f`` first)."""
    if f.target != g.source:
        raise ValueError("cannot compose: target of f differs from source of g")
    h = Homomorphism(f.source, g.target, tuple(g.mapping[c] for c in f.mapping))
    if not h.is_valid():
        raise ValueError("composite is not a homomorphism; an input was invalid")
    return h
