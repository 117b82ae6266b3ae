import itertools
import random

import pytest
from hypothesis import strategies as st

from palettekit import Hypergraph, Palette

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


def make_palette(k, triples, prefix="c"):
    return Palette([f"{prefix}{i}" for i in range(k)], triples)


def rand_palette(rng: random.Random, max_colors=4, max_triples=None, min_colors=1):
    k = rng.randint(min_colors, max_colors)
    cap = k ** 3 if max_triples is None else min(k ** 3, max_triples)
    t = {tuple(rng.randrange(k) for _ in range(3)) for _ in range(rng.randint(0, cap))}
    return make_palette(k, t)


def rand_hypergraph(rng: random.Random, n, p_edge=0.5):
    return Hypergraph(n, [e for e in itertools.combinations(range(n), 3) if rng.random() < p_edge])


@st.composite
def palettes(draw, max_colors=4, max_triples=12):
    k = draw(st.integers(1, max_colors))
    t = draw(
        st.sets(
            st.tuples(st.integers(0, k - 1), st.integers(0, k - 1), st.integers(0, k - 1)),
            max_size=max_triples,
        )
    )
    return make_palette(k, t)


# --- brute-force oracles -------------------------------------------------------


def brute_homs(p, q):
    """All maps p -> q preserving triples, by plain enumeration."""
    out = []
    for f in itertools.product(range(q.size), repeat=p.size):
        if all((f[x], f[y], f[z]) in q.triples for x, y, z in p.triples):
            out.append(f)
    return out


def brute_ordered_colorable(h, p):
    """Exhaustive search over all |C|^(n choose 2) pair colorings."""
    pos = h.position()
    pairs = list(itertools.combinations(range(h.n), 2))
    edges = [tuple(sorted(e, key=pos.__getitem__)) for e in h.base.edges]
    for cols in itertools.product(range(p.size), repeat=len(pairs)):
        c = {}
        for (u, v), col in zip(pairs, cols):
            c[(u, v)] = c[(v, u)] = col
        if all((c[(a, b)], c[(a, d)], c[(b, d)]) in p.triples for a, b, d in edges):
            return True
    return False


@pytest.fixture
def rng():
    return random.Random(12345)
