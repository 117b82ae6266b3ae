"""Random hypergraphs built from a palette and how dense they come out."""

# %%
import math

import numpy as np

from palettekit import P_4_81, check_certificate, min_induced_density, random_palette_hypergraph

weights = [2 / 9, 1 / 3, 2 / 9, 2 / 9]
h, coloring = random_palette_hypergraph(P_4_81, 60, weights, seed=0)
print(len(h.base.edges), "edges, density", len(h.base.edges) / math.comb(60, 3))
print("coloring certifies the hypergraph:", check_certificate(h, P_4_81, coloring))

# %%
dens = [len(random_palette_hypergraph(P_4_81, 60, weights, seed=s)[0].base.edges) / math.comb(60, 3) for s in range(20)]
print("mean over 20 seeds", np.mean(dens), " 4/81 =", 4 / 81)

# %%
# Sparsest induced subhypergraph on at least a given share of the vertices.
# At this size a half-sized subset can still avoid every edge; larger shares do better.
small, _ = random_palette_hypergraph(P_4_81, 16, weights, seed=1)
for frac in (0.5, 0.75, 1.0):
    print(frac, min_induced_density(small.base, frac))
