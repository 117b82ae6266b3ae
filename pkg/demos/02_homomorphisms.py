"""Searching for color maps that send allowed triples to allowed triples."""

# %%
from palettekit import P_3T, P_4_81, P_LM, count_homs, exists_hom, inverse, product, symmetrize

f = exists_hom(P_4_81, inverse(P_4_81))
print(f.named())
print("homs P_4_81 -> inv(P_4_81):", count_homs(P_4_81, inverse(P_4_81), 100))

# %%
# P_LM has a color that is both a left and a middle color. The target has none,
# so no map exists.
print(exists_hom(P_LM, P_4_81))

# %%
for src_name, src in [
    ("P_LM x sym(P_3T)", product([P_LM, symmetrize(P_3T)])),
    ("P_3T x sym(P_LM)", product([P_3T, symmetrize(P_LM)])),
]:
    for tgt_name, tgt in [("P_4_81", P_4_81), ("inv(P_4_81)", inverse(P_4_81))]:
        print(f"{src_name} ({src.size} colors) -> {tgt_name}:", exists_hom(src, tgt))
