"""Line-oriented text formats for palettes and hypergraphs.

Palette file::

    palette P_4_81
    colors alpha beta gamma omega
    triple alpha beta gamma

Hypergraph file::

    hypergraph K4minus 4
    order 0 1 2 3        # optional; makes the hypergraph ordered
    edge 0 1 2

``#`` starts a comment and blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path

from . import named
from .coloring import Hypergraph, OrderedHypergraph
from .palette import Palette, validate


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield no, body


def parse_palette(text: str) -> Palette:
    lines = list(_lines(text))
    if not lines:
        raise ParseError(1, "empty palette file")
    no, words = lines[0]
    if words[0] != "palette" or len(words) != 2:
        raise ParseError(no, "expected 'palette <name>'")
    name = words[1]
    if len(lines) < 2 or lines[1][1][0] != "colors":
        raise ParseError(lines[1][0] if len(lines) > 1 else no, "expected 'colors <name> ...'")
    no, words = lines[1]
    colors = words[1:]
    if not colors:
        raise ParseError(no, "palette needs at least one color")
    index = {}
    for c in colors:
        if c in index:
            raise ParseError(no, f"duplicate color {c!r}")
        index[c] = len(index)
    triples = set()
    for no, words in lines[2:]:
        if words[0] != "triple":
            raise ParseError(no, f"unknown directive {words[0]!r}")
        if len(words) != 4:
            raise ParseError(no, f"triple needs 3 colors, got {len(words) - 1}")
        try:
            t = tuple(index[c] for c in words[1:])
        except KeyError as exc:
            raise ParseError(no, f"undeclared color {exc.args[0]!r}") from None
        if t in triples:
            raise ParseError(no, f"duplicate triple {' '.join(words[1:])}")
        triples.add(t)
    p = Palette(colors, triples, name)
    problems = validate(p)
    if problems:
        raise ParseError(lines[1][0], problems[0])
    return p


def format_palette(p: Palette, name: str | None = None) -> str:
    label = name or p.name or "palette"
    label = "".join(ch if not ch.isspace() else "_" for ch in label)
    out = [f"palette {label}", "colors " + " ".join(p.colors)]
    out += ["triple " + " ".join(p.named(t)) for t in p.sorted_triples()]
    return "\n".join(out) + "\n"


def _int(no: int, word: str) -> int:
    try:
        return int(word)
    except ValueError:
        raise ParseError(no, f"expected an integer, got {word!r}") from None


def parse_hypergraph(text: str) -> tuple[str, Hypergraph | OrderedHypergraph]:
    """Parse a hypergraph file; returns ``(name, hypergraph)``."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError(1, "empty hypergraph file")
    no, words = lines[0]
    if words[0] != "hypergraph" or len(words) != 3:
        raise ParseError(no, "expected 'hypergraph <name> <vertexCount>'")
    name, n = words[1], _int(no, words[2])
    if n < 0:
        raise ParseError(no, "negative vertex count")
    order = None
    edges = []
    seen = set()
    for no, words in lines[1:]:
        if words[0] == "order":
            if order is not None:
                raise ParseError(no, "repeated order line")
            if edges:
                raise ParseError(no, "order line must precede edges")
            order = tuple(_int(no, w) for w in words[1:])
            if sorted(order) != list(range(n)):
                raise ParseError(no, f"order is not a permutation of 0..{n - 1}")
        elif words[0] == "edge":
            if len(words) != 4:
                raise ParseError(no, f"edge needs 3 vertices, got {len(words) - 1}")
            e = tuple(_int(no, w) for w in words[1:])
            if len(set(e)) != 3:
                raise ParseError(no, "edge vertices must be distinct")
            if not all(0 <= v < n for v in e):
                raise ParseError(no, f"vertex out of range [0, {n})")
            key = tuple(sorted(e))
            if key in seen:
                raise ParseError(no, f"duplicate edge {' '.join(words[1:])}")
            seen.add(key)
            edges.append(key)
        else:
            raise ParseError(no, f"unknown directive {words[0]!r}")
    h = Hypergraph(n, edges)
    return name, (h if order is None else OrderedHypergraph(h, order))


def format_hypergraph(h: Hypergraph | OrderedHypergraph, name: str = "H") -> str:
    base = h.base if isinstance(h, OrderedHypergraph) else h
    out = [f"hypergraph {name} {base.n}"]
    if isinstance(h, OrderedHypergraph):
        out.append("order " + " ".join(map(str, h.order)))
    out += [f"edge {a} {b} {c}" for a, b, c in base.sorted_edges()]
    return "\n".join(out) + "\n"


def load_palette(ref: str) -> Palette:
    """A palette from a file path, or a built-in when ``ref`` starts with ``@``."""
    if ref.startswith("@"):
        return named.get(ref)
    return parse_palette(Path(ref).read_text())


def load_hypergraph(path: str) -> tuple[str, Hypergraph | OrderedHypergraph]:
    return parse_hypergraph(Path(path).read_text())
