"""Maximizing the palette cubic over the probability simplex."""

# %%

from palettekit import P_4_81, brute_force_lagrangian, density, gradient, lagrangian

res = lagrangian(P_4_81)
print("value ", res.value, " 4/81 =", 4 / 81)
print("argmax", {c: round(float(w), 6) for c, w in zip(P_4_81.colors, res.argmax)})
print("kkt residual", res.kkt_residual)

# %%
# At the optimum the gradient is flat across the support.
print(gradient(P_4_81, res.argmax))

# %%
# The exact grid search over weights with denominator 9 hits 4/81 on the nose.
print("grid max:", brute_force_lagrangian(P_4_81, 9))
print("uniform weights give only the density:", density(P_4_81))
