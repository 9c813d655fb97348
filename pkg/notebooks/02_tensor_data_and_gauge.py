# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # F and R symbols, coherence and gauge freedom
#
# The shipped Ising data satisfies the pentagon and hexagon equations. A random change of
# basis on the fusion vertices changes the individual symbols but not the twists, S-matrix or
# Frobenius-Schur indicators.

# %%
import numpy as np

from umtc import catalog as cat
from umtc.fingerprint import invariant_fingerprint
from umtc.tensor_data import apply_gauge, check_hexagon, check_pentagon, random_gauge, reverse_braiding

# %%
b = cat.ising(1)
print("pentagon", check_pentagon(b.F).max_residual)
print("hexagon ", check_hexagon(b.F, b.R).max_residual)

# %%
rng = np.random.default_rng(0)
F2, R2 = apply_gauge(b.F, b.R, random_gauge(b.ring, rng))
print("R^{sigma psi}_sigma before/after:", b.R[(1, 2, 1)], R2[(1, 2, 1)])
print("still coherent:", check_pentagon(F2).passed, check_hexagon(F2, R2).passed)
print("same fingerprint:", invariant_fingerprint(F2, R2) == invariant_fingerprint(b.F, b.R))

# %% [markdown]
# The reverse braiding is again a solution, with conjugated twists.

# %%
rev = reverse_braiding(b.R)
fp, fp_rev = invariant_fingerprint(b.F, b.R), invariant_fingerprint(b.F, rev)
print(fp.twists, fp_rev.twists)
