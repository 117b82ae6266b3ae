"""Built-in palettes, addressable by name (``@P_4_81`` on the command line)."""

from __future__ import annotations

from .palette import Palette

P_LM = Palette.from_names(
    ["alpha", "beta'", "gamma", "gamma'", "omega"],
    [("alpha", "omega", "gamma"), ("omega", "beta'", "gamma'")],
    name="P_LM",
)

P_3T = Palette.from_names(
    ["alpha", "beta", "beta'", "beta''", "gamma''", "omega", "omega'"],
    [("alpha", "beta", "omega"), ("omega", "beta'", "omega'"), ("omega'", "beta''", "gamma''")],
    name="P_3T",
)

P_4_81 = Palette.from_names(
    ["alpha", "beta", "gamma", "omega"],
    [("alpha", "beta", "gamma"), ("alpha", "beta", "omega"), ("omega", "beta", "gamma")],
    name="P_4_81",
)

# two colors, triples (alpha, beta, alpha) and (alpha, beta, beta); K4^- separates
# it (and its inverse) from their product
P_TWO_COLOR = Palette.from_names(
    ["alpha", "beta"],
    [("alpha", "beta", "alpha"), ("alpha", "beta", "beta")],
    name="P_two_color",
)

REGISTRY: dict[str, Palette] = {
    "P_LM": P_LM,
    "P_3T": P_3T,
    "P_4_81": P_4_81,
    "P_two_color": P_TWO_COLOR,
}


def get(name: str) -> Palette:
    key = name[1:] if name.startswith("@") else name
    try:
        return REGISTRY[key]
    except KeyError:
        raise KeyError(f"unknown built-in palette {name!r}; known: {', '.join(REGISTRY)}") from None
