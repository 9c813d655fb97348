import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from umtc import catalog as cat  # noqa: E402
from umtc.bundle import catalog_names, load_bundle  # noqa: E402


@pytest.fixture(scope="session")
def shipped():
    return {name: load_bundle(name) for name in catalog_names()}


@pytest.fixture(scope="session")
def modular_shipped(shipped):
    return {k: b for k, b in shipped.items() if b.is_modular}


@pytest.fixture(scope="session")
def ising():
    return load_bundle("ising_k+")


@pytest.fixture(scope="session")
def fib():
    return load_bundle("fibonacci")


@pytest.fixture(scope="session")
def rep_z2():
    return cat.rep_z2()


@pytest.fixture(scope="session")
def svec():
    return cat.svec()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
