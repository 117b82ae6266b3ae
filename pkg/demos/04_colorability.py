"""Which small hypergraphs can be colored by a palette, with K4 minus an edge as the test case."""

# %%
from palettekit import P_TWO_COLOR, Hypergraph, colorable, inverse, product

k4_minus = Hypergraph(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
P = P_TWO_COLOR

for name, pal in [("P", P), ("inv(P)", inverse(P)), ("P x inv(P)", product([P, inverse(P)]))]:
    found = colorable(k4_minus, pal)
    if found is None:
        print(f"{name}: no vertex order works")
        continue
    order, cert = found
    print(f"{name}: order {order}, pair colors {cert.named()}")

# %%
# Ordered version: fix the vertex order and ask again.
from palettekit import ordered_colorable

for order in [(0, 1, 2, 3), (1, 0, 2, 3)]:
    print(order, ordered_colorable(k4_minus.ordered(order), P) is not None)
