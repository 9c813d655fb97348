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
# # Pairs of subcategories: trivial pairing and comparability
#
# In a prime modular category, two mutually centralizing subcategories whose closures have
# modular spectrum cannot both be nontrivial. Products give an obstruction, and fermionic
# subcategories show why the modular-spectrum hypothesis is needed.

# %%
from umtc import catalog as cat
from umtc.bundle import load_bundle
from umtc.points import comparability_resolve, holomorphic_obstruction, trivial_pairing
from umtc.subcategories import closure, deligne_product

# %%
fib = load_bundle("fibonacci")
print(comparability_resolve(fib, closure(fib, ["tau"]), closure(fib)).outcome)

# %%
P = deligne_product(cat.semion(), cat.antisemion())
left, right = closure(P, ["s.1"]), closure(P, ["1.s"])
print("pairing:", trivial_pairing(P, left, right).passed)
v = comparability_resolve(P, left, right)
print(v.outcome, v.witness)

# %%
ising = load_bundle("ising_k+")
psi = closure(ising, ["psi"])
print("pairing:", trivial_pairing(ising, psi, psi).passed)
print("intersection:", holomorphic_obstruction(ising, psi, psi))
print(comparability_resolve(ising, psi, psi).witness)
