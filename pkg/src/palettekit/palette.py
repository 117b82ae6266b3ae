"""Palettes over ordered color triples and the operations on them.

A palette is a finite list of named colors together with a set of feasible
ordered triples ``(left, middle, right)``.  Colors are addressed by their
index in ``colors``; names are only used for display and file I/O.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Sequence

if TYPE_CHECKING:
    from .homomorphism import Homomorphism

Triple = tuple[int, int, int]

PRODUCT_SEP = "*"
CLONE_MARK = "~"


@dataclass(frozen=True)
class Palette:
    colors: tuple[str, ...]
    triples: frozenset[Triple]
    name: str = field(default="", compare=False)

    def __init__(self, colors: Iterable[str], triples: Iterable[Sequence[int]], name: str = ""):
        object.__setattr__(self, "colors", tuple(colors))
        object.__setattr__(self, "triples", frozenset(tuple(t) for t in triples))
        object.__setattr__(self, "name", name)

    @classmethod
    def from_names(cls, colors: Sequence[str], triples: Iterable[Sequence[str]], name: str = "") -> "Palette":
        """Build a palette from color names, raising ``ValueError`` if invalid."""
        index = {c: i for i, c in enumerate(colors)}
        try:
            idx = [tuple(index[c] for c in t) for t in triples]
        except KeyError as exc:
            raise ValueError(f"undeclared color {exc.args[0]!r}") from None
        p = cls(colors, idx, name)
        problems = validate(p)
        if problems:
            raise ValueError("; ".join(problems))
        return p

    @property
    def size(self) -> int:
        return len(self.colors)

    def sorted_triples(self) -> list[Triple]:
        return sorted(self.triples)

    def index(self, color: str) -> int:
        return self.colors.index(color)

    def named(self, t: Triple) -> tuple[str, str, str]:
        return tuple(self.colors[c] for c in t)  # type: ignore[return-value]

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"Palette({label}{self.size} colors, {len(self.triples)} triples)"


@dataclass(frozen=True)
class ColorRoles:
    left: frozenset[int]
    middle: frozenset[int]
    right: frozenset[int]
    L: frozenset[int]
    M: frozenset[int]
    R: frozenset[int]
    B: frozenset[int]

    def partition_disjoint(self) -> bool:
        """True when L, M, R and B are pairwise disjoint."""
        parts = [self.L, self.M, self.R, self.B]
        return all(not (a & b) for a, b in itertools.combinations(parts, 2))


def validate(p: Palette) -> list[str]:
    """Return the list of invariant violations of ``p`` (empty when valid)."""
    problems = []
    seen = set()
    for i, c in enumerate(p.colors):
        if not isinstance(c, str) or not c:
            problems.append(f"color {i}: empty name")
        elif any(ch.isspace() for ch in c):
            problems.append(f"color {i}: name {c!r} contains whitespace")
        if c in seen:
            problems.append(f"color {i}: duplicate name {c!r}")
        seen.add(c)
    for t in sorted(p.triples, key=repr):
        if len(t) != 3:
            problems.append(f"triple {t}: arity {len(t)} != 3")
            continue
        for c in t:
            if not isinstance(c, int) or not 0 <= c < p.size:
                problems.append(f"triple {t}: ColorId out of range")
                break
    return problems


def density(p: Palette) -> Fraction:
    if p.size == 0:
        raise ValueError("empty palette")
    return Fraction(len(p.triples), p.size ** 3)


def inverse(p: Palette) -> Palette:
    return Palette(p.colors, ((z, y, x) for x, y, z in p.triples), p.name and f"inv({p.name})")


def product(ps: Sequence[Palette]) -> Palette:
    """Product palette; colors are ordered lexicographically by component index.

    The color with components ``(i_1, ..., i_k)`` sits at the mixed-radix index
    ``product_index([p.size for p in ps], (i_1, ..., i_k))``.
    """
    ps = list(ps)
    if not ps:
        raise ValueError("product of an empty list of palettes")
    for p in ps:
        if p.size == 0:
            raise ValueError("empty palette in product")
    sizes = [p.size for p in ps]
    colors = [PRODUCT_SEP.join(names) for names in itertools.product(*(p.colors for p in ps))]
    triples = []
    for combo in itertools.product(*(p.sorted_triples() for p in ps)):
        triples.append(tuple(product_index(sizes, [t[pos] for t in combo]) for pos in range(3)))
    name = " x ".join(p.name or "?" for p in ps) if any(p.name for p in ps) else ""
    return Palette(colors, triples, name)


def product_index(sizes: Sequence[int], components: Sequence[int]) -> int:
    idx = 0
    for n, c in zip(sizes, components):
        idx = idx * n + c
    return idx


def product_components(sizes: Sequence[int], idx: int) -> tuple[int, ...]:
    out = []
    for n in reversed(sizes):
        idx, c = divmod(idx, n)
        out.append(c)
    return tuple(reversed(out))


def sym_images(t: Triple, k: int) -> list[Triple]:
    """The six reorderings of an ordered triangle ``t``; ``k`` is the clone offset."""
    x, y, z = t

    def bar(c: int) -> int:
        return (c + k) % (2 * k)

    return [
        (x, y, z),
        (bar(x), z, y),
        (y, x, bar(z)),
        (bar(y), bar(z), x),
        (z, bar(x), bar(y)),
        (bar(z), bar(y), bar(x)),
    ]


def symmetrize(p: Palette) -> Palette:
    """Symmetrization: every color gains a clone at index ``size + i``."""
    k = p.size
    colors = list(p.colors) + [c + CLONE_MARK for c in p.colors]
    triples = set()
    for t in p.triples:
        triples.update(sym_images(t, k))
    return Palette(colors, triples, p.name and f"sym({p.name})")


def classify_roles(p: Palette) -> ColorRoles:
    left = frozenset(t[0] for t in p.triples)
    middle = frozenset(t[1] for t in p.triples)
    right = frozenset(t[2] for t in p.triples)
    return ColorRoles(
        left=left,
        middle=middle,
        right=right,
        L=left - right,
        M=middle,
        R=right - left,
        B=left & right,
    )


def find_isomorphism(p: Palette, q: Palette) -> Homomorphism | None:
    """A bijection of colors mapping the triples of ``p`` exactly onto those of ``q``."""
    from .homomorphism import Homomorphism, _search

    if p.size != q.size or len(p.triples) != len(q.triples):
        return None
    for mapping in _search(p, q, injective=True):
        return Homomorphism(p, q, mapping)
    return None
