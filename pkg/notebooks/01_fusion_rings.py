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
# # Fusion rings and Frobenius-Perron dimensions
#
# A fusion ring is a labelled set of sectors with integer structure constants `N[a, b, c]`.
# We build the Ising and Fibonacci rings, validate them and compute their dimensions.

# %%
import numpy as np

from umtc import catalog as cat
from umtc.fusion import fp_dimensions, global_dimension, ring_from_rules, validate_ring

# %%
ising = cat.ising_ring()
print(ising.labels)
print(ising.fuse("sigma", "sigma"))  # sigma x sigma = 1 + psi

# %%
report = validate_ring(ising)
print("valid:", report.valid)

# %% [markdown]
# Breaking a rule shows up as an axiom violation with the offending indices.

# %%
broken = ring_from_rules(["1", "sigma", "psi"],
                         {("sigma", "sigma"): ["1", "psi"], ("sigma", "psi"): ["sigma"], ("psi", "psi"): ["1", "psi"]})
for v in validate_ring(broken).violations[:3]:
    print(v)

# %% [markdown]
# Dimensions come from the Perron eigenvector of the summed fusion matrices.

# %%
for ring in (ising, cat.fibonacci_ring(), cat.cyclic_ring(5)):
    dims = fp_dimensions(ring)
    print(ring.labels, np.round(dims.d, 6), "D^2 =", round(global_dimension(dims), 9))
