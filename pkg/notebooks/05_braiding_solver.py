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
# # Enumerating braidings over a fusion ring
#
# Fix the fusion ring and an associator, then solve the hexagon equations for the R symbols.
# Solutions are counted up to gauge and sector relabeling.

# %%
import numpy as np

from umtc import catalog as cat
from umtc.solver import build_system, enumerate_ubtcs, solve

# %%
system = build_system(cat.ising_ring(), cat.ising_f(1))
print(system.unknown_labels(), system.count, "equations")
print(len(solve(system).solutions), "solutions for one associator")

# %%
catalog = enumerate_ubtcs(cat.ising_ring(), [cat.ising_f(1), cat.ising_f(-1)])
print(catalog.count, "braided structures,", catalog.modular_count, "modular")
for e in catalog.entries:
    print("F class", e.f_class, "theta_sigma turns", round(float(np.angle(e.twists[1]) / (2 * np.pi)) % 1, 4))

# %%
for n in (2, 3, 4):
    classes = [cat.pointed_cyclic(n, k).F for k in ((0,) if n % 2 else (0, 1))]
    print(f"Z{n}:", enumerate_ubtcs(cat.cyclic_ring(n), classes).count)
