"""Palettes, their density, and the three ways of building new ones."""

# %%
from palettekit import P_3T, P_4_81, P_TWO_COLOR, classify_roles, density, find_isomorphism, inverse, product, symmetrize
from palettekit.fileio import format_palette

# A palette is a color list plus a set of allowed (left, middle, right) triples.
print(format_palette(P_4_81))
print("density", density(P_4_81))

# %%
# inverse reverses every triple; for this palette that is just a renaming of colors
inv = inverse(P_4_81)
print(format_palette(inv))
print("renaming:", find_isomorphism(P_4_81, inv).named())

# %%
# product: colors are tuples, a triple is allowed when every coordinate is
pp = product([P_TWO_COLOR, inverse(P_TWO_COLOR)])
print(format_palette(pp))
print("density", density(pp), "=", density(P_TWO_COLOR), "*", density(inverse(P_TWO_COLOR)))

# %%
# symmetrize adds a clone c~ of each color and six reorderings of each triple
s = symmetrize(P_3T)
print(s.size, "colors,", len(s.triples), "triples")

# %%
r = classify_roles(P_4_81)
for label in "LMRB":
    print(label, sorted(P_4_81.colors[c] for c in getattr(r, label)))
