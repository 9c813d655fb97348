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
# # The `umtc` command line
#
# Each command prints a JSON report. Exit codes: 0 pass, 1 failed verdict, 2 bad input.

# %%
import json
import tempfile
from pathlib import Path

from umtc.cli import main

# %%
main(["modularity", "fibonacci"])

# %%
code = main(["modularity", "rep_z2", "--out", str(Path(tempfile.gettempdir()) / "rep.json")])
print("exit", code, json.loads((Path(tempfile.gettempdir()) / "rep.json").read_text())["witnesses"])

# %%
with tempfile.TemporaryDirectory() as tmp:
    prod = Path(tmp) / "ising_fib.json"
    main(["product", "ising_k+", "fibonacci", "--bundle-out", str(prod), "--out", str(Path(tmp) / "p.json")])
    print("exit", main(["prime-factor", str(prod), "--out", str(Path(tmp) / "f.json")]))
    print(json.loads((Path(tmp) / "f.json").read_text())["data"]["ranks"])
