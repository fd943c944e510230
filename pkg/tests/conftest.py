import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

import fixtures as F  # noqa: E402
from kualgebra import KUAlgebra, KUFunction, enumerate_algebras, gcd_algebra  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--order5", action="store_true", help="run the order-5 exhaustive checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--order5"):
        return
    skip = pytest.mark.skip(reason="needs --order5")
    for item in items:
        if "order5" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def data_dir():
    return HERE / "data"


@pytest.fixture(scope="session")
def five():
    return KUAlgebra(F.FIVE)


@pytest.fixture(scope="session")
def abcd():
    return KUAlgebra(F.ABCD, names=F.ABCD_NAMES)


@pytest.fixture(scope="session")
def four():
    return KUAlgebra(F.FOUR, names=F.FOUR_NAMES)


@pytest.fixture(scope="session")
def gcd9():
    return gcd_algebra(9)


@pytest.fixture(scope="session")
def xyz_function(abcd):
    return KUFunction.from_mapping(abcd, {"x": "a", "y": "b", "z": "c"})


@pytest.fixture(scope="session")
def xy_function(abcd):
    return KUFunction.from_mapping(abcd, {"x": "a", "y": "b"})


@pytest.fixture(scope="session")
def gcd_function(gcd9):
    return KUFunction(gcd9, list(F.GCD_FUNCTION), [k - 1 for k in F.GCD_FUNCTION.values()])


@pytest.fixture(scope="session")
def small_algebras():
    """Every labelled KU-algebra of order 1 to 4."""
    return [X for n in range(1, 5) for X in enumerate_algebras(n)]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key])
