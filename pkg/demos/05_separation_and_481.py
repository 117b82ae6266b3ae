"""Deciding whether a family of palettes can be told apart, and the full 4/81 check."""

# %%
from palettekit import P_3T, P_4_81, P_LM, P_TWO_COLOR, family_condition, inverse, multi_condition, product, verify_481
from palettekit.conditions import SeparationQuery, witness_search

print(family_condition(SeparationQuery([P_LM, P_3T], [P_4_81])))

# %%
# A blocked query: the certificate is the homomorphism that does the blocking.
v = family_condition(SeparationQuery([P_3T], [P_3T]))
print(v.separable, v.certificates[0].direction, v.certificates[0].hom.named())

# %%
# The plain product P x inv(P) maps onto itself, yet the symmetrized test says
# separable, and a 4-vertex witness exists.
P = P_TWO_COLOR
target = product([P, inverse(P)])
print(multi_condition([P, inverse(P)], target).separable)
print(witness_search(SeparationQuery([P], [target]), 4))

# %%
print(verify_481(spot_checks=500).format())
