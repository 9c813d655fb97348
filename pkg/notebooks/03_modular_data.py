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
# # Twists, S-matrix and modularity
#
# The unnormalized S-matrix is unitary up to `D^2` exactly when the braiding is non-degenerate.

# %%
import numpy as np

from umtc.bundle import load_bundle
from umtc.modular import killing_ring_check, modularity_check, verlinde_reconstruct

# %%
for name in ("ising_k+", "fibonacci", "semion", "rep_z2", "svec"):
    b = load_bundle(name)
    md = b.modular_data
    v = modularity_check(md)
    tag = "modular" if v.modular else f"degenerate, witness {[b.labels[a] for a in v.degenerate]}"
    print(f"{name:10s} theta turns {np.round(np.angle(md.theta) / (2 * np.pi) % 1, 4)}  {tag}")

# %%
md = load_bundle("ising_k+").modular_data
print(np.round(md.Stilde.real, 6))

# %% [markdown]
# The fusion rules are recovered from the S-matrix, and its rows against the dimension vector
# vanish except on the unit row.

# %%
res = verlinde_reconstruct(md)
print("Verlinde deviation", res.max_deviation)
print("killing ring residual", killing_ring_check(md))
