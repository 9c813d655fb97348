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
# # Subcategories, centralizers and prime factorization

# %%
from umtc import catalog as cat
from umtc.bundle import load_bundle
from umtc.fingerprint import bundle_fingerprint
from umtc.subcategories import (centralizer, closure, deligne_product, double_centralizer_check,
                                enumerate_subcategories, is_modular_sub, is_prime, prime_factorize)

# %%
ising = load_bundle("ising_k+")
for D in enumerate_subcategories(ising):
    Z = centralizer(ising, D).centralizer
    print(D, "-> centralizer", Z, "| modular:", is_modular_sub(ising, D).modular)
print("double centralizer holds:", double_centralizer_check(ising).passed)

# %% [markdown]
# A product of two prime categories splits back into its factors. The factor order is whatever
# the smallest-first search finds; compare as a multiset.

# %%
P = deligne_product(cat.ising(1), cat.fibonacci())
print("prime?", is_prime(P).prime)
pf = prime_factorize(P)
for f, fb in zip(pf.factors, pf.bundles):
    print(f.labels, bundle_fingerprint(fb).twists)
print("certificates", pf.s_residual, pf.t_residual)

# %%
print(closure(P, ["sigma.tau"]).labels)
